use super::{union_of, ConnectionSet};
use crate::group::ConjugacyData;

/// Lazy stream of canonical oriented class unions; see
/// [`enumerate_oriented_class_unions`].
#[derive(Debug, Clone)]
pub struct ClassUnions<'a> {
    conj: &'a ConjugacyData,
    /// `(j, class_inv(j))` with `j < class_inv(j)`.
    pairs: Vec<(usize, usize)>,
    /// Per pair: 0 = neither, 1 = first, 2 = second.
    choice: Vec<u8>,
    max_classes: usize,
    done: bool,
}

/// Every oriented connection set built from at most `max_classes` classes, one
/// representative per `{C, C^-1}` orbit: a set is emitted only when its sorted
/// class list is lexicographically smaller than that of its inverse.
pub fn enumerate_oriented_class_unions(conj: &ConjugacyData, max_classes: usize) -> ClassUnions<'_> {
    let pairs: Vec<(usize, usize)> = (1..conj.num_classes())
        .filter(|&j| j < conj.class_inv(j))
        .map(|j| (j, conj.class_inv(j)))
        .collect();
    ClassUnions {
        conj,
        choice: vec![0; pairs.len()],
        done: pairs.is_empty() || max_classes == 0,
        pairs,
        max_classes,
    }
}

impl ClassUnions<'_> {
    /// Advances the base-3 counter; false once it wraps around.
    fn step(&mut self) -> bool {
        for c in self.choice.iter_mut() {
            if *c < 2 {
                *c += 1;
                return true;
            }
            *c = 0;
        }
        false
    }

    fn current(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut set = Vec::new();
        let mut inv = Vec::new();
        for (&(a, b), &c) in self.pairs.iter().zip(&self.choice) {
            match c {
                1 => {
                    set.push(a);
                    inv.push(b);
                }
                2 => {
                    set.push(b);
                    inv.push(a);
                }
                _ => {}
            }
        }
        if set.is_empty() || set.len() > self.max_classes {
            return None;
        }
        set.sort_unstable();
        inv.sort_unstable();
        Some((set, inv))
    }
}

impl Iterator for ClassUnions<'_> {
    type Item = ConnectionSet;

    fn next(&mut self) -> Option<ConnectionSet> {
        while !self.done {
            if !self.step() {
                self.done = true;
                break;
            }
            if let Some((set, inv)) = self.current() {
                if set < inv {
                    return Some(union_of(self.conj, set, true));
                }
            }
        }
        None
    }
}

use super::{check_max_order, GroupSpec, GroupTable};
use crate::config::DEFAULT_MAX_ORDER;
use crate::{Error, Result};

fn assemble<F>(order: usize, labels: Vec<String>, family: GroupSpec, mul: F) -> Result<GroupTable>
where
    F: Fn(usize, usize) -> usize,
{
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            table.push(mul(a, b) as u32);
        }
    }
    GroupTable::from_parts(order, 0, table, labels, Some(family))
}

/// `Z_r`, element `i` labelled `"i"`.
pub fn build_cyclic(r: usize) -> Result<GroupTable> {
    if r == 0 {
        return Err(Error::InvalidParameter("cyclic group order must be at least 1".into()));
    }
    check_max_order("cyclic group", r as u128, DEFAULT_MAX_ORDER)?;
    let labels = (0..r).map(|i| i.to_string()).collect();
    assemble(r, labels, GroupSpec::Cyclic(r), |a, b| (a + b) % r)
}

/// Base-`r` digits of `index`, most significant first.
pub(crate) fn digits(mut index: usize, r: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for k in (0..n).rev() {
        out[k] = index % r;
        index /= r;
    }
    out
}

pub(crate) fn undigits(v: &[usize], r: usize) -> usize {
    v.iter().fold(0, |acc, &d| acc * r + d)
}

/// `Z_r^n` with elements enumerated as base-`r` digit vectors, first
/// coordinate most significant.
pub fn build_abelian_power(r: usize, n: usize, max_order: usize) -> Result<GroupTable> {
    if r < 2 || n < 1 {
        return Err(Error::InvalidParameter(format!("Z_{r}^{n} needs r >= 2 and n >= 1")));
    }
    let order = (r as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    check_max_order("abelian power", order, max_order)?;
    let order = order as usize;
    let labels = (0..order)
        .map(|i| {
            if n == 1 {
                i.to_string()
            } else {
                let d = digits(i, r, n);
                format!(
                    "({})",
                    d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                )
            }
        })
        .collect();
    let vectors: Vec<Vec<usize>> = (0..order).map(|i| digits(i, r, n)).collect();
    assemble(order, labels, GroupSpec::AbelianPower { r, n }, |a, b| {
        let sum: Vec<usize> = vectors[a]
            .iter()
            .zip(&vectors[b])
            .map(|(x, y)| (x + y) % r)
            .collect();
        undigits(&sum, r)
    })
}

fn power_word(name: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{e}"),
    }
}

/// Extraspecial group of order `3^(2n+1)`.
///
/// Exponent 3 is the Heisenberg group over `F_3`: triples `(a, b, c)` with
/// `a, b` in `F_3^n`, `c` in `F_3`, and `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+a.b')`.
/// Its elements are indexed `(a, b, c)` in mixed radix and labelled by the
/// normal form `y^b x^a z^c`. Exponent 9 (only `n = 1`) is
/// `<x, y | x^9 = y^3 = 1, y x y^-1 = x^4>` with elements `x^i y^j`.
pub fn build_extraspecial3(n: usize, exponent: u32, max_order: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidParameter("extraspecial rank n must be at least 1".into()));
    }
    let order = 3u128.checked_pow(2 * n as u32 + 1).unwrap_or(u128::MAX);
    match (n, exponent) {
        (_, 3) => {}
        (1, 9) => {}
        _ => {
            return Err(Error::InvalidParameter(format!(
                "extraspecial 3-group with n = {n} and exponent {exponent} is not supported"
            )))
        }
    }
    check_max_order("extraspecial 3-group", order, max_order)?;
    let order = order as usize;
    let family = GroupSpec::Extraspecial3 { n, exponent };

    if exponent == 9 {
        let labels = (0..order)
            .map(|idx| {
                let (i, j) = (idx / 3, idx % 3);
                let w = power_word("x", i) + &power_word("y", j);
                if w.is_empty() {
                    "e".to_string()
                } else {
                    w
                }
            })
            .collect();
        return assemble(order, labels, family, |p, q| {
            let (i, j) = (p / 3, p % 3);
            let (k, l) = (q / 3, q % 3);
            let twist = 4usize.pow(j as u32) % 9;
            ((i + k * twist) % 9) * 3 + (j + l) % 3
        });
    }

    let decode = |idx: usize| -> (Vec<usize>, Vec<usize>, usize) {
        let c = idx % 3;
        let ab = digits(idx / 3, 3, 2 * n);
        (ab[..n].to_vec(), ab[n..].to_vec(), c)
    };
    let gen = |base: &str, i: usize| {
        if n == 1 {
            base.to_string()
        } else {
            format!("{base}{}", i + 1)
        }
    };
    let labels = (0..order)
        .map(|idx| {
            let (a, b, c) = decode(idx);
            let mut w = String::new();
            for (i, &e) in b.iter().enumerate() {
                w += &power_word(&gen("y", i), e);
            }
            for (i, &e) in a.iter().enumerate() {
                w += &power_word(&gen("x", i), e);
            }
            w += &power_word("z", c);
            if w.is_empty() {
                "e".to_string()
            } else {
                w
            }
        })
        .collect();
    let decoded: Vec<_> = (0..order).map(decode).collect();
    assemble(order, labels, family, |p, q| {
        let (a, b, c) = &decoded[p];
        let (a2, b2, c2) = &decoded[q];
        let dot: usize = a.iter().zip(b2).map(|(x, y)| x * y).sum();
        let mut ab: Vec<usize> = a.iter().zip(a2).map(|(x, y)| (x + y) % 3).collect();
        ab.extend(b.iter().zip(b2).map(|(x, y)| (x + y) % 3));
        undigits(&ab, 3) * 3 + (c + c2 + dot) % 3
    })
}

/// `M_2(n) = <x, s | x^(2^(n-1)) = s^2 = e, s x s = x^(2^(n-2)+1)>`.
///
/// Element `x^i s^j` has index `j * 2^(n-1) + i`, so powers of `x` come first.
pub fn build_modular_maximal_cyclic(n: u32, max_order: usize) -> Result<GroupTable> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("M_2(n) needs n >= 3, got {n}")));
    }
    if n >= 64 {
        return Err(Error::size("M_2(n)", u128::MAX, max_order as u128));
    }
    check_max_order("M_2(n)", 1u128 << n, max_order)?;
    let half = 1usize << (n - 1);
    let twist = (1usize << (n - 2)) + 1;
    let order = 2 * half;
    let labels = (0..order)
        .map(|idx| {
            let (i, j) = (idx % half, idx / half);
            let w = power_word("x", i) + if j == 1 { "s" } else { "" };
            if w.is_empty() {
                "e".to_string()
            } else {
                w
            }
        })
        .collect();
    assemble(order, labels, GroupSpec::ModularMaximalCyclic(n), |p, q| {
        let (i, j) = (p % half, p / half);
        let (k, l) = (q % half, q / half);
        // s^j x^k = x^(k * twist^j) s^j
        let k = if j == 1 { (k * twist) % half } else { k };
        let i = (i + k) % half;
        ((j + l) % 2) * half + i
    })
}

/// Lexicographic rank of a permutation of `0..n` in one-line notation.
pub fn permutation_rank(perm: &[usize]) -> usize {
    let n = perm.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = perm[i + 1..].iter().filter(|&&x| x < perm[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

pub fn permutation_unrank(mut rank: usize, n: usize) -> Vec<usize> {
    let mut fact = vec![1usize; n + 1];
    for i in 1..=n {
        fact[i] = fact[i - 1] * i;
    }
    let mut pool: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let q = rank / fact[i];
        rank %= fact[i];
        out.push(pool.remove(q));
    }
    out
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub(crate) fn one_line(perm: &[usize]) -> String {
    perm.iter()
        .map(|x| (x + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// `S_n` on lexicographically ranked permutations, `(p q)(i) = p(q(i))`.
pub fn build_symmetric(n: usize, max_order: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidParameter("S_n needs n >= 1".into()));
    }
    check_max_order("symmetric group", factorial(n), max_order)?;
    let order = factorial(n) as usize;
    let perms: Vec<Vec<usize>> = (0..order).map(|r| permutation_unrank(r, n)).collect();
    let labels = perms.iter().map(|p| format!("[{}]", one_line(p))).collect();
    assemble(order, labels, GroupSpec::Symmetric(n), |a, b| {
        let composed: Vec<usize> = perms[b].iter().map(|&i| perms[a][i]).collect();
        permutation_rank(&composed)
    })
}

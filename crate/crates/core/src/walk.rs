//! Character-free evolution `U(t) = e^{tA}` by one Hermitian eigensolve of `iA`.

use std::fmt::Write;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::Serialize;

use crate::{Error, Result};

const SKEW_TOL: f64 = 1e-12;
const RECONSTRUCTION_TOL: f64 = 1e-9;
const UNITARY_TOL: f64 = 1e-9;
const GOLDEN_TOL: f64 = 1e-10;
const SCAN_THRESHOLD: f64 = 0.999;

/// `H = V diag(mu) V*` with `U(t) = V diag(e^{-i mu t}) V*`.
#[derive(Debug, Clone)]
pub struct WalkOperator {
    n: usize,
    mu: DVector<f64>,
    v: DMatrix<Complex64>,
    v_adj: DMatrix<Complex64>,
    reconstruction_error: f64,
}

/// Operator for an oriented graph: `H = iA` with `A` skew-symmetric.
pub fn build_operator(a: &DMatrix<f64>) -> Result<WalkOperator> {
    check_square(a)?;
    let skew = (a + a.transpose()).amax();
    if skew > SKEW_TOL {
        return Err(Error::InvalidInput(format!("matrix is not skew-symmetric ({skew:.3e})")));
    }
    let h = a.map(|x| Complex64::new(0.0, x));
    WalkOperator::from_complex_hermitian(h)
}

fn check_square(a: &DMatrix<f64>) -> Result<()> {
    if a.nrows() != a.ncols() {
        return Err(Error::InvalidInput("matrix is not square".into()));
    }
    Ok(())
}

impl WalkOperator {
    /// Operator `e^{-itH}` for a real symmetric `H`, e.g. an undirected adjacency matrix.
    pub fn from_hermitian(h: &DMatrix<f64>) -> Result<WalkOperator> {
        check_square(h)?;
        let asym = (h - h.transpose()).amax();
        if asym > SKEW_TOL {
            return Err(Error::InvalidInput(format!("matrix is not symmetric ({asym:.3e})")));
        }
        WalkOperator::from_complex_hermitian(h.map(|x| Complex64::new(x, 0.0)))
    }

    fn from_complex_hermitian(h: DMatrix<Complex64>) -> Result<WalkOperator> {
        let n = h.nrows();
        let eig = h.clone().symmetric_eigen();
        let v = eig.eigenvectors;
        let v_adj = v.adjoint();
        let diag = DMatrix::from_diagonal(&eig.eigenvalues.map(|m| Complex64::new(m, 0.0)));
        let recon = (&v * diag * &v_adj - &h).iter().fold(0.0f64, |acc, x| acc.max(x.norm()));
        if recon > RECONSTRUCTION_TOL * (1.0 + h.iter().fold(0.0f64, |a, x| a.max(x.norm()))) {
            return Err(Error::NumericalFailure(format!("eigendecomposition residual {recon:.3e}")));
        }
        Ok(WalkOperator {
            n,
            mu: eig.eigenvalues,
            v,
            v_adj,
            reconstruction_error: recon,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn reconstruction_error(&self) -> f64 {
        self.reconstruction_error
    }

    /// Eigenvalues of `H`, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self.mu.iter().copied().collect();
        out.sort_by(f64::total_cmp);
        out
    }

    fn phases(&self, t: f64) -> Vec<Complex64> {
        self.mu.iter().map(|&m| Complex64::from_polar(1.0, -m * t)).collect()
    }

    pub fn evolve_complex(&self, t: f64) -> DMatrix<Complex64> {
        let ph = self.phases(t);
        let mut scaled = self.v.clone();
        for (k, p) in ph.iter().enumerate() {
            for i in 0..self.n {
                scaled[(i, k)] *= p;
            }
        }
        scaled * &self.v_adj
    }

    /// `U(t)` as a real matrix; fails if it is not real-orthogonal to 1e-9.
    pub fn evolve(&self, t: f64) -> Result<DMatrix<f64>> {
        let u = self.evolve_complex(t);
        let imag = u.iter().fold(0.0f64, |a, x| a.max(x.im.abs()));
        if imag > UNITARY_TOL {
            return Err(Error::InvariantBreach(format!("U({t}) has imaginary part {imag:.3e}")));
        }
        let real = u.map(|x| x.re);
        let orth = (real.transpose() * &real - DMatrix::identity(self.n, self.n)).amax();
        if orth > UNITARY_TOL {
            return Err(Error::InvariantBreach(format!("U({t}) is not orthogonal ({orth:.3e})")));
        }
        Ok(real)
    }

    /// Column `U(t) e_a`, in `O(n^2)`.
    pub fn column(&self, t: f64, a: usize) -> Vec<Complex64> {
        let ph = self.phases(t);
        let coeff: Vec<Complex64> = (0..self.n).map(|k| self.v_adj[(k, a)] * ph[k]).collect();
        (0..self.n)
            .map(|b| (0..self.n).map(|k| self.v[(b, k)] * coeff[k]).sum())
            .collect()
    }

    pub fn fidelity(&self, t: f64, a: usize, b: usize) -> Fidelity {
        let amp = self.column(t, a)[b];
        Fidelity {
            value: amp.norm(),
            phase: amp.re.signum(),
            amplitude_im: amp.im,
        }
    }

    /// Permutation represented by `U(t)`, if every column is a signed basis vector.
    pub fn permutation_check(&self, t: f64, a: &DMatrix<f64>, tol: f64) -> Result<Option<PermutationCheck>> {
        let u = self.evolve(t)?;
        let mut perm = Vec::with_capacity(self.n);
        let mut all_positive = true;
        for col in 0..self.n {
            let (row, val) = u
                .column(col)
                .iter()
                .enumerate()
                .max_by(|x, y| x.1.abs().total_cmp(&y.1.abs()))
                .map(|(i, v)| (i, *v))
                .unwrap_or((0, 0.0));
            if (val.abs() - 1.0).abs() > tol {
                return Ok(None);
            }
            all_positive &= val > 0.0;
            perm.push(row);
        }
        let mut seen = vec![false; self.n];
        for &p in &perm {
            if std::mem::replace(&mut seen[p], true) {
                return Ok(None);
            }
        }
        let commutator = (&u * a - a * &u).amax();
        Ok(Some(PermutationCheck {
            fixed_point_free: perm.iter().enumerate().all(|(i, &p)| i != p),
            order: permutation_order(&perm),
            all_positive,
            commutator,
            perm,
        }))
    }

    /// Grid scan of `max_{b != a} fidelity(t, a, b)`, refined by golden-section
    /// search around grid maxima above 0.999.
    pub fn scan_pst(&self, a: usize, t_max: f64, steps: usize) -> Vec<ScanCandidate> {
        let series = self.fidelity_series(a, t_max, steps);
        let mut out = Vec::new();
        for i in 0..series.len() {
            let (t, f, b) = (series[i].t, series[i].fidelity, series[i].target);
            if f < SCAN_THRESHOLD {
                continue;
            }
            let left = if i > 0 { series[i - 1].fidelity } else { f64::NEG_INFINITY };
            let right = series.get(i + 1).map_or(f64::NEG_INFINITY, |s| s.fidelity);
            if f < left || f < right {
                continue;
            }
            let dt = t_max / steps as f64;
            let lo = (t - dt).max(0.0);
            let hi = t + dt;
            let (tb, fb) = golden_max(|s| self.fidelity(s, a, b).value, lo, hi, GOLDEN_TOL);
            if fb >= SCAN_THRESHOLD {
                // neighbouring grid points can straddle one peak
                if out.last().is_some_and(|c: &ScanCandidate| c.target == b && (c.t - tb).abs() < 2.0 * dt) {
                    continue;
                }
                out.push(ScanCandidate {
                    t: tb,
                    target: b,
                    fidelity: fb,
                });
            }
        }
        out
    }

    /// `(t, max_{b != a} fidelity, argmax b)` on `steps` grid points in `(0, t_max]`.
    pub fn fidelity_series(&self, a: usize, t_max: f64, steps: usize) -> Vec<SeriesPoint> {
        (1..=steps.max(1))
            .map(|i| {
                let t = t_max * i as f64 / steps.max(1) as f64;
                let col = self.column(t, a);
                let (target, fidelity) = col
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| *b != a)
                    .map(|(b, x)| (b, x.norm()))
                    .max_by(|x, y| x.1.total_cmp(&y.1))
                    .unwrap_or((a, 0.0));
                SeriesPoint { t, fidelity, target }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Fidelity {
    pub value: f64,
    /// Sign of the real part of `U(t)[b][a]`.
    pub phase: f64,
    pub amplitude_im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PermutationCheck {
    /// `perm[a] = b` when `U(t) e_a = ± e_b`.
    pub perm: Vec<usize>,
    pub all_positive: bool,
    pub fixed_point_free: bool,
    pub order: usize,
    /// `max |UA - AU|`.
    pub commutator: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanCandidate {
    pub t: f64,
    pub target: usize,
    pub fidelity: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesPoint {
    pub t: f64,
    pub fidelity: f64,
    pub target: usize,
}

pub fn series_csv(series: &[SeriesPoint]) -> String {
    let mut out = String::from("t,fidelity,argmax\n");
    for p in series {
        let _ = writeln!(out, "{},{},{}", p.t, p.fidelity, p.target);
    }
    out
}

pub fn permutation_order(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut order = 1usize;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        order = order / crate::group::gcd(order as u64, len as u64) as usize * len;
    }
    order
}

fn golden_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = hi - inv_phi * (hi - lo);
    let mut d = lo + inv_phi * (hi - lo);
    let (mut fc, mut fd) = (f(c), f(d));
    while hi - lo > tol {
        if fc > fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    let t = 0.5 * (lo + hi);
    (t, f(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::OrientedCayleyGraph;
    use crate::group::{build_cyclic, conjugacy};
    use std::f64::consts::PI;

    fn op_for(r: usize, classes: &[usize]) -> (WalkOperator, DMatrix<f64>) {
        let g = build_cyclic(r).unwrap();
        let c = conjugacy(&g);
        let a = OrientedCayleyGraph::from_classes(&g, &c, classes).unwrap().adjacency_matrix();
        (build_operator(&a).unwrap(), a)
    }

    #[test]
    fn zero_matrix() {
        let op = build_operator(&DMatrix::zeros(4, 4)).unwrap();
        assert!(op.eigenvalues().iter().all(|&m| m == 0.0));
        assert!((op.evolve(1.7).unwrap() - DMatrix::identity(4, 4)).amax() < 1e-15);
        assert!(op.scan_pst(0, 10.0, 100).is_empty());
    }

    #[test]
    fn rejects_non_skew() {
        let mut a = DMatrix::zeros(2, 2);
        a[(0, 1)] = 1.0;
        assert!(matches!(build_operator(&a), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn circulant_eigenvalues() {
        let (op, _) = op_for(3, &[1]);
        let e = op.eigenvalues();
        let s = 3f64.sqrt();
        for (x, y) in e.iter().zip([-s, 0.0, s]) {
            assert!((x - y).abs() < 1e-12);
        }
        let (op, _) = op_for(4, &[1]);
        let e = op.eigenvalues();
        for (x, y) in e.iter().zip([-2.0, 0.0, 0.0, 2.0]) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn z3_transfer_and_group_law() {
        let (op, a) = op_for(3, &[1]);
        let tau = 2.0 * PI / (3.0 * 3f64.sqrt());
        let u = op.evolve(tau).unwrap();
        assert!((u[(1, 0)] - 1.0).abs() < 1e-12);
        assert!((op.evolve(0.0).unwrap() - DMatrix::identity(3, 3)).amax() < 1e-12);
        let (s, t) = (0.37, 1.91);
        let lhs = op.evolve(s).unwrap() * op.evolve(t).unwrap();
        assert!((lhs - op.evolve(s + t).unwrap()).amax() < 1e-9);
        let p = op.permutation_check(tau, &a, 1e-9).unwrap().unwrap();
        assert_eq!(p.perm, vec![1, 2, 0]);
        assert_eq!(p.order, 3);
        assert!(p.fixed_point_free && p.all_positive && p.commutator < 1e-9);
    }

    #[test]
    fn z4_half_turn() {
        let (op, _) = op_for(4, &[1]);
        let f = op.fidelity(PI / 2.0, 0, 2);
        assert!((f.value - 1.0).abs() < 1e-12);
        assert_eq!(f.phase, 1.0);
        assert!((op.fidelity(0.0, 1, 1).value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn scan_recovers_z3_time() {
        let (op, _) = op_for(3, &[1]);
        let hits = op.scan_pst(0, 2.0, 2000);
        let tau = 2.0 * PI / (3.0 * 3f64.sqrt());
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].target, 1);
        assert!((hits[0].t - tau).abs() < 1e-6);
    }

    #[test]
    fn series_csv_shape() {
        let (op, _) = op_for(4, &[1]);
        let csv = series_csv(&op.fidelity_series(0, 1.0, 4));
        assert_eq!(csv.lines().count(), 5);
        assert!(csv.starts_with("t,fidelity,argmax"));
    }

    #[test]
    fn permutation_orders() {
        assert_eq!(permutation_order(&[1, 0, 3, 4, 2]), 6);
        assert_eq!(permutation_order(&[0, 1]), 1);
    }
}

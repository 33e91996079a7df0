//! Weighted Newton operators at the matrix level.
//!
//! Given a symmetric operator `A` (in an orthonormal tangent frame) and a
//! weight value `μ0`, the chain `T_k^∞ = σ_k^∞·I − A·T_{k−1}^∞` packages the
//! classical Newton-transformation calculus with the weight folded in.
//! Two independent constructions — the inductive chain ([`newton_chain`])
//! and the alternating power sum ([`newton_explicit`]) — are kept separate
//! so their agreement stays a checkable fact.

use crate::error::{CurvError, Result};
use crate::scalar::{binomial, Scalar};
use crate::sympoly::{sigma_inf_closed, sigma_inf_reduced_parts, Spectrum};
use nalgebra::DMatrix;

/// Symmetric endomorphism of an n-dimensional tangent space, stored dense
/// and row-major in an orthonormal frame.
#[derive(Debug, Clone, PartialEq)]
pub struct Endomorphism<S: Scalar> {
    n: usize,
    data: Vec<S>,
}

impl<S: Scalar> Endomorphism<S> {
    /// Identity operator.
    pub fn identity(n: usize) -> Self {
        let mut e = Self::zeros(n);
        for i in 0..n {
            e.data[i * n + i] = S::one();
        }
        e
    }

    /// Zero operator.
    pub fn zeros(n: usize) -> Self {
        Endomorphism {
            n,
            data: vec![S::zero(); n * n],
        }
    }

    /// Diagonal operator with the given entries.
    pub fn diagonal(entries: &[S]) -> Self {
        let mut e = Self::zeros(entries.len());
        for (i, v) in entries.iter().enumerate() {
            e.data[i * entries.len() + i] = v.clone();
        }
        e
    }

    /// Build from rows, enforcing squareness and symmetry.
    ///
    /// Exact mode demands exact symmetry; float mode tolerates deviations up
    /// to `1e−12` relative to the largest entry and symmetrizes the rest.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(CurvError::MatrixStructure {
                requirement: "square",
                deviation: f64::NAN,
            });
        }
        let mut e = Endomorphism {
            n,
            data: rows.into_iter().flatten().collect(),
        };
        if !e.data.iter().all(|v| v.is_finite()) {
            return Err(CurvError::non_finite("endomorphism entries"));
        }
        let scale = e
            .data
            .iter()
            .map(|v| v.to_f64().abs())
            .fold(1.0f64, f64::max);
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                let a = e.get(i, j).clone();
                let b = e.get(j, i).clone();
                if S::EXACT {
                    if a != b {
                        return Err(CurvError::MatrixStructure {
                            requirement: "symmetric",
                            deviation: (a.to_f64() - b.to_f64()).abs(),
                        });
                    }
                } else {
                    worst = worst.max((a.to_f64() - b.to_f64()).abs());
                    let mean = (a + b) / S::from_i64(2);
                    e.data[i * n + j] = mean.clone();
                    e.data[j * n + i] = mean;
                }
            }
        }
        if worst > 1e-12 * scale {
            return Err(CurvError::MatrixStructure {
                requirement: "symmetric",
                deviation: worst,
            });
        }
        Ok(e)
    }

    /// Dimension of the underlying space.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at row `i`, column `j`.
    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.n + j]
    }

    /// True when every off-diagonal entry is exactly zero.
    pub fn is_diagonal(&self) -> bool {
        (0..self.n)
            .all(|i| (0..self.n).all(|j| i == j || self.data[i * self.n + j] == S::zero()))
    }

    /// Diagonal entries, if the operator is diagonal.
    pub fn diagonal_entries(&self) -> Option<Vec<S>> {
        if self.is_diagonal() {
            Some((0..self.n).map(|i| self.get(i, i).clone()).collect())
        } else {
            None
        }
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = S::zero();
                for l in 0..n {
                    acc = acc + self.get(i, l).clone() * rhs.get(l, j).clone();
                }
                out.data[i * n + j] = acc;
            }
        }
        out
    }

    /// Sum `self + rhs`.
    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let mut out = self.clone();
        for (o, r) in out.data.iter_mut().zip(&rhs.data) {
            *o = o.clone() + r.clone();
        }
        out
    }

    /// Difference `self − rhs`.
    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let mut out = self.clone();
        for (o, r) in out.data.iter_mut().zip(&rhs.data) {
            *o = o.clone() - r.clone();
        }
        out
    }

    /// Scalar multiple `c · self`.
    pub fn scale(&self, c: &S) -> Self {
        let mut out = self.clone();
        for o in out.data.iter_mut() {
            *o = o.clone() * c.clone();
        }
        out
    }

    /// Apply to a vector expressed in the same frame.
    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.n, "dimension mismatch");
        (0..self.n)
            .map(|i| {
                let mut acc = S::zero();
                for j in 0..self.n {
                    acc = acc + self.get(i, j).clone() * v[j].clone();
                }
                acc
            })
            .collect()
    }

    /// Trace.
    pub fn trace(&self) -> S {
        let mut acc = S::zero();
        for i in 0..self.n {
            acc = acc + self.get(i, i).clone();
        }
        acc
    }
}

/// Eigenvalues of a symmetric operator as a [`Spectrum`]-ready list.
///
/// Diagonal operators read their spectrum off directly in either mode.
/// Dense symmetric operators are only supported in float mode, where a
/// symmetric eigensolver runs and the residual `‖Av − λv‖` of every pair is
/// checked against `1e−10` (relative to `1 + ‖A‖`). Exact mode refuses dense
/// input: there is no exact eigensolver, and pretending otherwise would
/// poison the ground-truth arithmetic.
pub fn spectrum_of<S: Scalar>(a: &Endomorphism<S>) -> Result<Vec<S>> {
    if let Some(d) = a.diagonal_entries() {
        return Ok(d);
    }
    if S::EXACT {
        return Err(CurvError::ExactEigenUnsupported);
    }
    let n = a.n;
    let m = DMatrix::from_fn(n, n, |i, j| a.get(i, j).to_f64());
    let scale = 1.0 + m.norm();
    let eig = m.clone().symmetric_eigen();
    for c in 0..n {
        let v = eig.eigenvectors.column(c);
        let residual = (&m * v - v * eig.eigenvalues[c]).norm();
        if residual > 1e-10 * scale {
            return Err(CurvError::Numerical {
                context: "symmetric eigensolve".into(),
                detail: format!("eigenpair residual {residual:e} exceeds 1e-10 relative"),
            });
        }
    }
    Ok(eig.eigenvalues.iter().map(|&l| S::from_f64_lossy(l)).collect())
}

/// The inductive family `T_0^∞…T_{k_max}^∞` with its σ ladder.
///
/// The σ values are computed once from the spectrum of `A` and shared by
/// every rung, so the operators and the scalars cannot drift apart. The
/// ladder carries one extra entry (`σ_{k_max+1}^∞`) because the trace
/// identity for `T_{k_max}^∞` needs it.
#[derive(Debug, Clone)]
pub struct NewtonChain<S: Scalar> {
    mu0: S,
    a: Endomorphism<S>,
    t: Vec<Endomorphism<S>>,
    sigma: Vec<S>,
}

impl<S: Scalar> NewtonChain<S> {
    /// The weight value the chain was built with.
    pub fn mu0(&self) -> &S {
        &self.mu0
    }

    /// The operator the chain was built from.
    pub fn a(&self) -> &Endomorphism<S> {
        &self.a
    }

    /// Highest rung index `k_max`.
    pub fn k_max(&self) -> usize {
        self.t.len() - 1
    }

    /// The operator `T_k^∞`.
    pub fn t(&self, k: usize) -> &Endomorphism<S> {
        &self.t[k]
    }

    /// `σ_k^∞` for `k = 0…k_max+1`.
    pub fn sigma(&self, k: usize) -> &S {
        &self.sigma[k]
    }
}

/// Build the chain `T_k^∞ = σ_k^∞·I − A·T_{k−1}^∞`, `T_0^∞ = I`.
pub fn newton_chain<S: Scalar>(
    mu0: &S,
    a: &Endomorphism<S>,
    k_max: usize,
) -> Result<NewtonChain<S>> {
    let n = a.n();
    if k_max > n {
        return Err(CurvError::bad_index("k_max", k_max, format!("0..={n}")));
    }
    let sigma = sigma_ladder(mu0, a, k_max + 1)?;
    let mut t = Vec::with_capacity(k_max + 1);
    t.push(Endomorphism::identity(n));
    for k in 1..=k_max {
        let prev: &Endomorphism<S> = &t[k - 1];
        let rung = Endomorphism::identity(n)
            .scale(&sigma[k])
            .sub(&a.mul(prev));
        t.push(rung);
    }
    Ok(NewtonChain {
        mu0: mu0.clone(),
        a: a.clone(),
        t,
        sigma,
    })
}

/// σ ladder `σ_0^∞…σ_{top}^∞` from the spectrum of `A`.
fn sigma_ladder<S: Scalar>(mu0: &S, a: &Endomorphism<S>, top: usize) -> Result<Vec<S>> {
    let spectrum = Spectrum::new(mu0.clone(), spectrum_of(a)?)?;
    Ok((0..=top).map(|k| sigma_inf_closed(&spectrum, k)).collect())
}

/// The alternating power sum `T_k^∞ = Σ_{j=0}^{k} (−1)^j σ_{k−j}^∞ A^j`.
///
/// Contract (asserted in tests): agrees with [`newton_chain`] exactly in
/// exact mode. Powers of `A` are formed by repeated multiplication — `k`
/// never exceeds the ambient dimension here, so there is nothing to optimize.
pub fn newton_explicit<S: Scalar>(
    mu0: &S,
    a: &Endomorphism<S>,
    k: usize,
) -> Result<Endomorphism<S>> {
    let n = a.n();
    if k > n {
        return Err(CurvError::bad_index("k", k, format!("0..={n}")));
    }
    let sigma = sigma_ladder(mu0, a, k)?;
    let mut acc = Endomorphism::zeros(n);
    let mut a_pow = Endomorphism::identity(n);
    for j in 0..=k {
        let term = a_pow.scale(&sigma[k - j]);
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        if j < k {
            a_pow = a_pow.mul(a);
        }
    }
    Ok(acc)
}

/// Residual of the trace identity
/// `trace(A·T_k^∞) = (k+1)·σ_{k+1}^∞ − μ0·σ_k^∞`, for `0 ≤ k ≤ n−1`.
///
/// Both sides are computed independently — the trace from the chain's
/// operators, the right side from the σ ladder — so a zero residual is
/// evidence, not tautology.
pub fn trace_identity_residual<S: Scalar>(
    mu0: &S,
    a: &Endomorphism<S>,
    k: usize,
) -> Result<S> {
    let n = a.n();
    if k >= n {
        return Err(CurvError::bad_index("k", k, format!("0..={}", n - 1)));
    }
    let chain = newton_chain(mu0, a, k)?;
    let lhs = a.mul(chain.t(k)).trace();
    let rhs = S::from_i64((k + 1) as i64) * chain.sigma(k + 1).clone()
        - mu0.clone() * chain.sigma(k).clone();
    Ok(lhs - rhs)
}

/// Per-index residual `(T_k^∞)_{ii} − σ_{k,i}^∞` for a diagonal operator:
/// the eigenvalues of the weighted Newton operator against the reduced
/// symmetric functions, each side evaluated independently.
pub fn eigenstructure_residual<S: Scalar>(
    mu0: &S,
    d: &Endomorphism<S>,
    k: usize,
) -> Result<Vec<S>> {
    let entries = d.diagonal_entries().ok_or(CurvError::MatrixStructure {
        requirement: "diagonal",
        deviation: f64::NAN,
    })?;
    let chain = newton_chain(mu0, d, k.min(d.n()))?;
    let t_k = if k <= d.n() {
        chain.t(k).clone()
    } else {
        return Err(CurvError::bad_index("k", k, format!("0..={}", d.n())));
    };
    Ok((0..d.n())
        .map(|i| t_k.get(i, i).clone() - sigma_inf_reduced_parts(mu0, &entries, k, i + 1))
        .collect())
}

/// Weighted mean curvature `H_{k,f} = σ_k^∞ / C(n,k)`.
///
/// For `k = 1` this is `(σ_1 + μ0)/n`, i.e. the classical mean curvature
/// plus the weight contribution.
pub fn weighted_mean_curvature<S: Scalar>(
    mu0: &S,
    a: &Endomorphism<S>,
    k: usize,
) -> Result<S> {
    let n = a.n();
    if k > n {
        return Err(CurvError::bad_index("k", k, format!("0..={n}")));
    }
    let spectrum = Spectrum::new(mu0.clone(), spectrum_of(a)?)?;
    Ok(sigma_inf_closed(&spectrum, k) / binomial::<S>(n, k))
}

/// Whether the data is `σ_r^∞`-minimal: `|H_{r,f}| ≤ tol`.
pub fn minimality_test<S: Scalar>(
    mu0: &S,
    a: &Endomorphism<S>,
    r: usize,
    tol: f64,
) -> Result<bool> {
    Ok(weighted_mean_curvature(mu0, a, r)?.to_f64().abs() <= tol)
}

/// Mean curvatures `H_{0,f}…H_{n,f}` with the combinatorial constants used
/// by the flux bookkeeping.
#[derive(Debug, Clone)]
pub struct CurvatureVector<S: Scalar> {
    n: usize,
    h: Vec<S>,
    binom: Vec<S>,
}

impl<S: Scalar> CurvatureVector<S> {
    /// Assemble all mean curvatures of `(μ0, A)` at once.
    pub fn new(mu0: &S, a: &Endomorphism<S>) -> Result<Self> {
        let n = a.n();
        let spectrum = Spectrum::new(mu0.clone(), spectrum_of(a)?)?;
        let binom: Vec<S> = (0..=n).map(|k| binomial::<S>(n, k)).collect();
        let h = (0..=n)
            .map(|k| sigma_inf_closed(&spectrum, k) / binom[k].clone())
            .collect();
        Ok(CurvatureVector { n, h, binom })
    }

    /// Dimension `n` of the tangent space.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `H_{k,f}` for `k = 0…n`.
    pub fn h(&self, k: usize) -> &S {
        &self.h[k]
    }

    /// `C(n,k)` for `k = 0…n`.
    pub fn binom(&self, k: usize) -> &S {
        &self.binom[k]
    }

    /// Divergence-side constant `(n−k)·C(n,k)`; multiplies `H_{k,f}` in the
    /// flux bookkeeping. Satisfies `(n−k)·C(n,k)·H_{k,f} = (n−k)·σ_k^∞`.
    pub fn c_flux(&self, k: usize) -> S {
        S::from_i64((self.n - k) as i64) * self.binom[k].clone()
    }

    /// Weight-side constant `n·C(n,k−1)`; multiplies `μ0·H_{k−1,f}` in the
    /// same bookkeeping (requires `k ≥ 1`).
    pub fn c_weight(&self, k: usize) -> S {
        assert!(k >= 1, "weight constant needs k >= 1");
        S::from_i64(self.n as i64) * self.binom[k - 1].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Exact;

    fn q(n: i64, d: i64) -> Exact {
        Exact::from_ratio(n, d)
    }

    fn diag(entries: &[i64]) -> Endomorphism<Exact> {
        Endomorphism::diagonal(
            &entries
                .iter()
                .map(|&e| Exact::from_i64(e))
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn chain_hand_values() {
        let a = diag(&[1, 2, 3]);
        let one = Exact::from_i64(1);

        let chain = newton_chain(&one, &a, 2).unwrap();
        assert_eq!(chain.t(0), &Endomorphism::identity(3));
        assert_eq!(
            chain.t(1).diagonal_entries().unwrap(),
            vec![q(6, 1), q(5, 1), q(4, 1)]
        );
        assert_eq!(
            chain.t(2).diagonal_entries().unwrap(),
            vec![q(23, 2), q(15, 2), q(11, 2)]
        );

        // Classical specialization at μ0 = 0.
        let classical = newton_chain(&Exact::from_i64(0), &a, 1).unwrap();
        assert_eq!(
            classical.t(1).diagonal_entries().unwrap(),
            vec![q(5, 1), q(4, 1), q(3, 1)]
        );

        assert!(newton_chain(&one, &a, 4).is_err(), "k_max > n");
    }

    #[test]
    fn explicit_matches_hand_expansion() {
        let a = diag(&[1, 2, 3]);
        let one = Exact::from_i64(1);
        assert_eq!(
            newton_explicit(&one, &a, 0).unwrap(),
            Endomorphism::identity(3)
        );
        assert_eq!(
            newton_explicit(&one, &a, 1).unwrap().diagonal_entries().unwrap(),
            vec![q(6, 1), q(5, 1), q(4, 1)]
        );
        // σ₂^∞ − σ₁^∞·μ + μ² entry-wise: 35/2 − 7μ + μ².
        assert_eq!(
            newton_explicit(&one, &a, 2).unwrap().diagonal_entries().unwrap(),
            vec![
                q(35, 2) - q(7, 1) + q(1, 1),
                q(35, 2) - q(14, 1) + q(4, 1),
                q(35, 2) - q(21, 1) + q(9, 1)
            ]
        );
    }

    #[test]
    fn trace_identity_hand_values() {
        let a = diag(&[1, 2, 3]);
        let one = Exact::from_i64(1);

        // trace(A·T₁^∞) = 1·6 + 2·5 + 3·4 = 28 = 2·(35/2) − 1·7.
        let chain = newton_chain(&one, &a, 1).unwrap();
        assert_eq!(a.mul(chain.t(1)).trace(), q(28, 1));
        assert_eq!(trace_identity_residual(&one, &a, 1).unwrap(), q(0, 1));

        for k in 0..=2 {
            assert_eq!(
                trace_identity_residual(&Exact::from_i64(0), &a, k).unwrap(),
                q(0, 1),
                "classical identity at k={k}"
            );
        }
        assert!(trace_identity_residual(&one, &a, 3).is_err());
    }

    #[test]
    fn eigenstructure_hand_values() {
        let zero = Exact::from_i64(0);
        let one = Exact::from_i64(1);
        let a = diag(&[1, 2, 3]);

        for (mu0, k) in [(&zero, 1usize), (&zero, 0), (&one, 2)] {
            let res = eigenstructure_residual(mu0, &a, k).unwrap();
            assert!(res.iter().all(|r| *r == q(0, 1)), "mu0={mu0:?} k={k}");
        }

        let dense = Endomorphism::from_rows(vec![
            vec![q(1, 1), q(1, 2)],
            vec![q(1, 2), q(1, 1)],
        ])
        .unwrap();
        assert!(eigenstructure_residual(&zero, &dense, 1).is_err());
    }

    #[test]
    fn trace_of_t_matches_sigma_combination() {
        // trace(T_k^∞) = (n−k)σ_k^∞ + μ0·σ_{k−1}^∞ at hand values.
        let a = diag(&[1, 2, 3]);
        let mu0 = q(1, 2);
        let chain = newton_chain(&mu0, &a, 3).unwrap();
        for k in 1..=3usize {
            let lhs = chain.t(k).trace();
            let rhs = Exact::from_i64((3 - k) as i64) * chain.sigma(k).clone()
                + mu0.clone() * chain.sigma(k - 1).clone();
            assert_eq!(lhs, rhs, "k={k}");
        }
    }

    #[test]
    fn mean_curvature_values() {
        let zero = Exact::from_i64(0);
        let one = Exact::from_i64(1);

        // Unit sphere normalization: A = I on S² gives H₁ = 1.
        assert_eq!(
            weighted_mean_curvature(&zero, &diag(&[1, 1]), 1).unwrap(),
            q(1, 1)
        );
        assert_eq!(
            weighted_mean_curvature(&one, &diag(&[1, 2, 3]), 2).unwrap(),
            q(35, 6)
        );

        // Gaussian-weight sphere data: A = −I/√n with μ0 = √n kills H₁.
        let n = 4usize;
        let lam = -1.0 / (n as f64).sqrt();
        let a = Endomorphism::diagonal(&vec![lam; n]);
        let mu0 = (n as f64).sqrt();
        assert!(weighted_mean_curvature(&mu0, &a, 1).unwrap().abs() < 1e-15);
        assert!(minimality_test(&mu0, &a, 1, 1e-10).unwrap());

        assert!(minimality_test(&0.0, &Endomorphism::<f64>::zeros(3), 1, 1e-10).unwrap());
        assert!(!minimality_test(&0.0, &Endomorphism::diagonal(&[1.0, 2.0, 3.0]), 2, 1e-10).unwrap());
    }

    #[test]
    fn curvature_vector_constants() {
        let v = CurvatureVector::new(&q(1, 1), &diag(&[1, 2, 3])).unwrap();
        assert_eq!(v.n(), 3);
        for (k, expect) in [(0usize, 1i64), (1, 3), (2, 3), (3, 1)] {
            assert_eq!(v.binom(k), &Exact::from_i64(expect));
        }
        // C(n,k)·H_k recovers σ_k^∞.
        assert_eq!(v.binom(2).clone() * v.h(2).clone(), q(35, 2));
        assert_eq!(v.c_flux(1), q(6, 1), "(n−1)·C(3,1)");
        assert_eq!(v.c_weight(2), q(9, 1), "n·C(3,1)");
    }

    #[test]
    fn dense_float_spectrum_has_checked_residual() {
        // Rotated diag(1,3) by 45°: eigenvalues must come back {1,3}.
        let dense = Endomorphism::from_rows(vec![vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let mut spec = spectrum_of(&dense).unwrap();
        spec.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((spec[0] - 1.0).abs() < 1e-12);
        assert!((spec[1] - 3.0).abs() < 1e-12);

        // Exact mode refuses dense input outright.
        let exact_dense = Endomorphism::from_rows(vec![
            vec![q(2, 1), q(1, 1)],
            vec![q(1, 1), q(2, 1)],
        ])
        .unwrap();
        assert!(matches!(
            spectrum_of(&exact_dense),
            Err(CurvError::ExactEigenUnsupported)
        ));
    }

    #[test]
    fn from_rows_validates() {
        assert!(Endomorphism::from_rows(vec![vec![1.0, 2.0]]).is_err());
        assert!(Endomorphism::from_rows(vec![
            vec![1.0, 2.0],
            vec![2.0 + 1e-6, 1.0]
        ])
        .is_err());
        assert!(Endomorphism::from_rows(vec![
            vec![q(1, 1), q(2, 1)],
            vec![q(2, 1), q(1, 1)]
        ])
        .is_ok());
        assert!(Endomorphism::from_rows(vec![vec![f64::NAN]]).is_err());
    }
}

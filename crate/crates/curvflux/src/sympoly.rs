//! Weighted elementary symmetric functions.
//!
//! For a weight value `μ0` and a list of principal values `μ = (μ1,…,μn)`,
//! the weighted elementary symmetric function `σ_k^∞(μ0, μ)` is the degree-k
//! coefficient of the generating series `e^{μ0 t}·Π_j (1 + μ_j t)`.
//! Two independent evaluators are provided — a Newton-identity recursion
//! ([`sigma_inf_recursive`]) and the exponential-series closed form
//! ([`sigma_inf_closed`]) — and their agreement is asserted by the test
//! suite, never assumed by the code.
//!
//! Invariants verified downstream:
//! - `σ_k^∞(0, μ) = σ_k(μ)` (classical elementary symmetric functions);
//! - the shift rule `σ_k^∞(μ0+μ1, μ) = Σ_j μ1^j/j! · σ_{k−j}^∞(μ0, μ)`;
//! - `σ̃_k(λ, μ) = σ_k(μ1+λ, …, μn+λ)` via binomially weighted sums.

use crate::error::{CurvError, Result};
use crate::scalar::{binomial, factorial, Scalar};

/// A weight value together with a list of principal values.
///
/// Geometrically `mu0` plays the role of `⟨∇f, N⟩` and `mu` collects the
/// principal curvatures; algebraically they are just the arguments of
/// `σ_k^∞`. The shifted spectrum `(μ_i + λ)` stands in for a torsion-shifted
/// second fundamental form, so no separate type is needed for that.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<S: Scalar> {
    mu0: S,
    mu: Vec<S>,
}

impl<S: Scalar> Spectrum<S> {
    /// Build a spectrum; requires at least one principal value and finite
    /// entries (the latter only bites in float mode).
    pub fn new(mu0: S, mu: Vec<S>) -> Result<Self> {
        if mu.is_empty() {
            return Err(CurvError::EmptySpectrum);
        }
        if !mu0.is_finite() || mu.iter().any(|m| !m.is_finite()) {
            return Err(CurvError::non_finite("spectrum entries"));
        }
        Ok(Spectrum { mu0, mu })
    }

    /// Number of principal values `n`.
    pub fn n(&self) -> usize {
        self.mu.len()
    }

    /// The weight value `μ0`.
    pub fn mu0(&self) -> &S {
        &self.mu0
    }

    /// The principal values `μ1,…,μn`.
    pub fn entries(&self) -> &[S] {
        &self.mu
    }

    /// Same principal values with a different weight value.
    pub fn with_mu0(&self, mu0: S) -> Self {
        Spectrum {
            mu0,
            mu: self.mu.clone(),
        }
    }

    /// Entry-wise shift `μ_i + λ` (weight value unchanged).
    pub fn shifted(&self, lambda: &S) -> Self {
        Spectrum {
            mu0: self.mu0.clone(),
            mu: self
                .mu
                .iter()
                .map(|m| m.clone() + lambda.clone())
                .collect(),
        }
    }

    /// Power sums `p_i = Σ_j μ_j^i` for `i = 0…up_to` (so `p_0 = n`).
    ///
    /// Built in one pass per call; every recursion evaluation shares a single
    /// table, keeping it O(k·n) without interior mutability.
    pub fn power_sums(&self, up_to: usize) -> Vec<S> {
        power_sums(&self.mu, up_to)
    }
}

fn power_sums<S: Scalar>(mu: &[S], up_to: usize) -> Vec<S> {
    let mut table = Vec::with_capacity(up_to + 1);
    table.push(S::from_i64(mu.len() as i64));
    let mut powers: Vec<S> = vec![S::one(); mu.len()];
    for _ in 1..=up_to {
        let mut sum = S::zero();
        for (p, m) in powers.iter_mut().zip(mu) {
            *p = p.clone() * m.clone();
            sum = sum + p.clone();
        }
        table.push(sum);
    }
    table
}

/// Classical elementary symmetric function `σ_k(μ)`: the sum of all products
/// of `k` distinct entries. Returns 1 for `k = 0` and 0 for `k > n`.
pub fn sigma_k<S: Scalar>(mu: &[S], k: usize) -> S {
    sigma_all(mu, k)[k].clone()
}

/// All of `σ_0(μ)…σ_{k_max}(μ)` by the one-entry-at-a-time recurrence.
fn sigma_all<S: Scalar>(mu: &[S], k_max: usize) -> Vec<S> {
    let mut e = vec![S::zero(); k_max + 1];
    e[0] = S::one();
    for m in mu {
        let top = k_max.min(mu.len());
        for j in (1..=top).rev() {
            e[j] = e[j].clone() + m.clone() * e[j - 1].clone();
        }
    }
    e
}

/// `σ_k^∞(μ0, μ)` by the Newton-identity recursion.
///
/// Logarithmic differentiation of the generating series
/// `P(t) = e^{μ0 t}·Π_j (1 + μ_j t)` gives
///
/// ```text
/// k·σ_k^∞ = σ_{k−1}^∞·(μ0 + Σ_j μ_j)
///         + Σ_{i=1}^{k−1} (−1)^i σ_{k−1−i}^∞ · p_{i+1},   p_m = Σ_j μ_j^m,
/// ```
///
/// with `σ_0^∞ = 1`. Note the asymmetry the weight value introduces: `μ0`
/// enters the linear term only — the power sums run over the principal
/// values alone, because `μ0` contributes `e^{μ0 t}` rather than a linear
/// factor to the series. Evaluated bottom-up with one shared power-sum
/// table, O(k·n) per call.
pub fn sigma_inf_recursive<S: Scalar>(s: &Spectrum<S>, k: usize) -> S {
    sigma_inf_recursive_parts(&s.mu0, &s.mu, k)
}

fn sigma_inf_recursive_parts<S: Scalar>(mu0: &S, mu: &[S], k: usize) -> S {
    if k == 0 {
        return S::one();
    }
    let p = power_sums(mu, k.max(1));
    let mut ladder: Vec<S> = Vec::with_capacity(k + 1);
    ladder.push(S::one());
    for m in 1..=k {
        let mut acc = ladder[m - 1].clone() * (mu0.clone() + p[1].clone());
        let mut sign_negative = true;
        for i in 1..=m - 1 {
            let term = ladder[m - 1 - i].clone() * p[i + 1].clone();
            acc = if sign_negative { acc - term } else { acc + term };
            sign_negative = !sign_negative;
        }
        ladder.push(acc / S::from_i64(m as i64));
    }
    ladder.pop().expect("ladder holds k+1 entries")
}

/// `σ_k^∞(μ0, μ)` by the closed form `Σ_{j=0}^{k} μ0^j/j! · σ_{k−j}(μ)`.
pub fn sigma_inf_closed<S: Scalar>(s: &Spectrum<S>, k: usize) -> S {
    sigma_inf_closed_parts(&s.mu0, &s.mu, k)
}

fn sigma_inf_closed_parts<S: Scalar>(mu0: &S, mu: &[S], k: usize) -> S {
    let sig = sigma_all(mu, k);
    let mut acc = S::zero();
    let mut mu0_pow = S::one();
    for j in 0..=k {
        acc = acc + mu0_pow.clone() * sig[k - j].clone() / factorial::<S>(j);
        mu0_pow = mu0_pow * mu0.clone();
    }
    acc
}

/// The shift expansion `Σ_{j=0}^k (μ1^j/j!)·σ_{k−j}^∞(μ0, μ)`.
///
/// Contract (asserted in tests): equals `σ_k^∞(μ0+μ1, μ)` exactly.
pub fn sigma_inf_shift<S: Scalar>(s: &Spectrum<S>, mu1: &S, k: usize) -> S {
    let mut acc = S::zero();
    let mut mu1_pow = S::one();
    for j in 0..=k {
        acc = acc + mu1_pow.clone() * sigma_inf_closed(s, k - j) / factorial::<S>(j);
        mu1_pow = mu1_pow * mu1.clone();
    }
    acc
}

/// The binomially weighted shift `σ̃_k = Σ_{j=0}^k C(n−k+j, j)·λ^j·σ_{k−j}(μ)`.
///
/// Contract (asserted in tests): equals `σ_k` of the shifted list `(μ_i+λ)`.
/// Defined only for `k ≤ n`; beyond that the binomial indices make no sense.
pub fn sigma_tilde<S: Scalar>(lambda: &S, mu: &[S], k: usize) -> Result<S> {
    let n = mu.len();
    if k > n {
        return Err(CurvError::bad_index("k", k, format!("0..={n}")));
    }
    let sig = sigma_all(mu, k);
    let mut acc = S::zero();
    let mut lambda_pow = S::one();
    for j in 0..=k {
        acc = acc + binomial::<S>(n - k + j, j) * lambda_pow.clone() * sig[k - j].clone();
        lambda_pow = lambda_pow * lambda.clone();
    }
    Ok(acc)
}

/// Ratio of the degree-j coefficient in the binomial shift (`σ̃_k`) to the
/// one in the exponential shift (`σ_k^∞`): `C(n−k+j, j)·j!`.
///
/// Contract (asserted in tests): equals the rising product
/// `(n−k+1)(n−k+2)…(n−k+j)`.
pub fn coefficient_ratio<S: Scalar>(n: usize, k: usize, j: usize) -> Result<S> {
    if k > n {
        return Err(CurvError::bad_index("k", k, format!("0..={n}")));
    }
    if j > k {
        return Err(CurvError::bad_index("j", j, format!("0..={k}")));
    }
    Ok(binomial::<S>(n - k + j, j) * factorial::<S>(j))
}

/// Reduced function `σ_{k,i}^∞`: `σ_k^∞` of the spectrum with the `i`-th
/// principal value deleted (`i` is 1-based, `1 ≤ i ≤ n`).
///
/// Contract (asserted in tests): `σ_{k,i}^∞ = σ_k^∞ − μ_i·σ_{k−1,i}^∞`, and
/// `σ_{k,i}^∞` is the `i`-th eigenvalue of the weighted Newton operator.
pub fn sigma_inf_reduced<S: Scalar>(s: &Spectrum<S>, k: usize, i: usize) -> Result<S> {
    if i == 0 || i > s.n() {
        return Err(CurvError::bad_index("i", i, format!("1..={}", s.n())));
    }
    Ok(sigma_inf_reduced_parts(&s.mu0, &s.mu, k, i))
}

/// Slice-level reduced evaluation; tolerates the empty remainder that
/// deletion leaves when n = 1 (where `σ_k^∞(μ0, ∅) = μ0^k/k!`).
pub(crate) fn sigma_inf_reduced_parts<S: Scalar>(mu0: &S, mu: &[S], k: usize, i: usize) -> S {
    let mut reduced: Vec<S> = Vec::with_capacity(mu.len() - 1);
    for (idx, m) in mu.iter().enumerate() {
        if idx != i - 1 {
            reduced.push(m.clone());
        }
    }
    sigma_inf_closed_parts(mu0, &reduced, k)
}

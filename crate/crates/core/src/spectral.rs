//! Closed-walk class profiles, π-spectra and the cospectrality relations
//! built on them.

use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{bigint_to_f64, Complex64};
use crate::error::{Error, Result};
use crate::graph::GainGraph;
use crate::group::FiniteGroup;
use crate::rep::Representation;

/// Tolerance on `M - M*` before a represented matrix is rejected.
pub const HERMITIAN_TOLERANCE: f64 = 1e-9;
/// Relative gap below which eigenvalues are reported as one.
pub const MULTIPLICITY_TOLERANCE: f64 = 1e-8;
/// Distance to an integer below which a polynomial coefficient is rounded.
pub const COEFFICIENT_ROUNDING: f64 = 1e-6;

/// `counts[h][c]`: closed walks of length `h` whose gain lies in class `c`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassProfile {
    group: Arc<FiniteGroup>,
    counts: Vec<Vec<BigUint>>,
}

impl ClassProfile {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn hmax(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[Vec<BigUint>] {
        &self.counts
    }

    pub fn count(&self, h: usize, class: usize) -> &BigUint {
        &self.counts[h][class]
    }

    /// Closed walks of length `h` with identity gain.
    pub fn balanced(&self, h: usize) -> &BigUint {
        &self.counts[h][0]
    }

    /// Total closed walks of length `h`.
    pub fn total(&self, h: usize) -> BigUint {
        self.counts[h].iter().sum()
    }

    /// `Σ_c counts[h][c]·χ(c)`.
    pub fn character_sum(&self, h: usize, chi: &[Complex64]) -> Complex64 {
        self.counts[h]
            .iter()
            .zip(chi)
            .map(|(k, x)| x * bigint_to_f64(&BigInt::from(k.clone())))
            .sum()
    }

    /// Smallest `h` (and a class) at which the two profiles differ.
    pub fn first_difference(&self, other: &ClassProfile) -> Option<(usize, usize)> {
        self.counts
            .iter()
            .zip(&other.counts)
            .enumerate()
            .find_map(|(h, (a, b))| a.iter().zip(b).position(|(x, y)| x != y).map(|c| (h, c)))
    }

    pub fn to_record(&self) -> ProfileRecord {
        ProfileRecord {
            hmax: self.hmax(),
            classes: (0..self.group.num_classes())
                .map(|c| self.group.class_name(c).to_string())
                .collect(),
            counts: self
                .counts
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|k| k.to_string().parse().expect("decimal integer"))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn from_record(record: &ProfileRecord, group: Arc<FiniteGroup>) -> Result<Self> {
        let classes = group.num_classes();
        if record.classes.len() != classes || record.counts.len() != record.hmax + 1 {
            return Err(Error::InvalidArgument(
                "profile shape does not match group".into(),
            ));
        }
        let counts = record
            .counts
            .iter()
            .map(|row| {
                if row.len() != classes {
                    return Err(Error::InvalidArgument("profile row length".into()));
                }
                row.iter()
                    .map(|k| {
                        k.to_string()
                            .parse::<BigUint>()
                            .map_err(|_| Error::InvalidArgument(format!("bad count {k}")))
                    })
                    .collect()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassProfile { group, counts })
    }
}

/// JSON form of a [`ClassProfile`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileRecord {
    pub hmax: usize,
    pub classes: Vec<String>,
    pub counts: Vec<Vec<serde_json::Number>>,
}

/// `Tr(A^h)` for `h = 0..=hmax`, as per-element coefficient vectors.
pub fn trace_powers(g: &GainGraph, hmax: usize) -> Vec<Vec<BigUint>> {
    let n = g.vertex_count();
    let grp = g.group();
    let order = grp.order();
    let max_degree = (0..n).map(|v| g.underlying().degree(v)).max().unwrap_or(0);
    // walks of length h from a vertex number at most Δ^h, so u128 is exact
    // while Δ^h < 2^127
    let fast_steps = if max_degree <= 1 {
        hmax
    } else {
        (127.0 / (max_degree as f64).log2()).floor() as usize
    };
    let mut traces = vec![vec![BigUint::zero(); order]; hmax + 1];
    traces[0][grp.identity()] = BigUint::from(n);
    for i in 0..n {
        let mut cur = vec![0u128; n * order];
        cur[i * order + grp.identity()] = 1;
        let mut h = 0;
        while h < hmax.min(fast_steps) {
            cur = advance(g, &cur);
            h += 1;
            for z in 0..order {
                traces[h][z] += cur[i * order + z];
            }
        }
        if h < hmax {
            let mut big: Vec<BigUint> = cur.iter().map(|&x| BigUint::from(x)).collect();
            while h < hmax {
                big = advance(g, &big);
                h += 1;
                for z in 0..order {
                    traces[h][z] += &big[i * order + z];
                }
            }
        }
    }
    traces
}

/// One step of the walk recursion: row `i` of `A^{h+1}` from row `i` of `A^h`.
fn advance<T>(g: &GainGraph, cur: &[T]) -> Vec<T>
where
    T: Clone + Zero + for<'a> std::ops::AddAssign<&'a T>,
{
    let grp = g.group();
    let order = grp.order();
    let mut next = vec![T::zero(); cur.len()];
    for k in 0..g.vertex_count() {
        for z in 0..order {
            let val = &cur[k * order + z];
            if val.is_zero() {
                continue;
            }
            for &(j, x) in g.out_edges(k) {
                next[j * order + grp.mul(z, x)] += val;
            }
        }
    }
    next
}

/// `μ(Tr(A^h))` for `h = 0..=hmax`, computed exactly.
pub fn walk_class_profile(g: &GainGraph, hmax: usize) -> ClassProfile {
    let grp = g.group();
    let counts = trace_powers(g, hmax)
        .into_iter()
        .map(|per_element| {
            let mut row = vec![BigUint::zero(); grp.num_classes()];
            for (z, k) in per_element.into_iter().enumerate() {
                row[grp.class_of(z)] += k;
            }
            row
        })
        .collect();
    ClassProfile {
        group: grp.clone(),
        counts,
    }
}

fn check_same_group(g1: &GainGraph, g2: &GainGraph) -> Result<()> {
    if g1.group().same_as(g2.group()) {
        Ok(())
    } else {
        Err(Error::GroupMismatch)
    }
}

/// `max(n₁, n₂)·⌈√|G|⌉`.
pub fn default_horizon(g1: &GainGraph, g2: &GainGraph) -> usize {
    let order = g1.group().order();
    let mut root = (order as f64).sqrt() as usize;
    while root * root < order {
        root += 1;
    }
    g1.vertex_count().max(g2.vertex_count()) * root
}

/// Exact `G`-cospectrality with the default horizon.
pub fn g_cospectral(g1: &GainGraph, g2: &GainGraph) -> Result<bool> {
    g_cospectral_with_horizon(g1, g2, default_horizon(g1, g2))
}

pub fn g_cospectral_with_horizon(g1: &GainGraph, g2: &GainGraph, hmax: usize) -> Result<bool> {
    Ok(first_profile_difference(g1, g2, hmax)?.is_none())
}

/// First `(h, class)` with differing counts, for `h ≤ hmax`.
pub fn first_profile_difference(
    g1: &GainGraph,
    g2: &GainGraph,
    hmax: usize,
) -> Result<Option<(usize, usize)>> {
    check_same_group(g1, g2)?;
    Ok(walk_class_profile(g1, hmax).first_difference(&walk_class_profile(g2, hmax)))
}

/// Equal numbers of balanced closed walks for every `h ≤ max(n₁,n₂)·|G|`.
pub fn lambda_cospectral(g1: &GainGraph, g2: &GainGraph) -> Result<bool> {
    let hmax = g1.vertex_count().max(g2.vertex_count()) * g1.group().order();
    lambda_cospectral_with_horizon(g1, g2, hmax)
}

pub fn lambda_cospectral_with_horizon(g1: &GainGraph, g2: &GainGraph, hmax: usize) -> Result<bool> {
    check_same_group(g1, g2)?;
    let (a, b) = (trace_powers(g1, hmax), trace_powers(g2, hmax));
    let e = g1.group().identity();
    Ok(a.iter().zip(&b).all(|(x, y)| x[e] == y[e]))
}

/// Sorted eigenvalues of a Hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
}

/// An eigenvalue and how many times it occurs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Eigenvalue {
    pub value: f64,
    pub multiplicity: usize,
}

impl Spectrum {
    pub fn new(mut eigenvalues: Vec<f64>) -> Self {
        eigenvalues.sort_by(f64::total_cmp);
        Spectrum { eigenvalues }
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Eigenvalues within `1e-8·(1+|λ|)` of their predecessor are merged.
    pub fn grouped(&self) -> Vec<Eigenvalue> {
        let mut out: Vec<(f64, usize, f64)> = Vec::new();
        for &x in &self.eigenvalues {
            match out.last_mut() {
                Some((sum, count, last))
                    if (x - *last).abs() <= MULTIPLICITY_TOLERANCE * (1.0 + x.abs()) =>
                {
                    *sum += x;
                    *count += 1;
                    *last = x;
                }
                _ => out.push((x, 1, x)),
            }
        }
        out.into_iter()
            .map(|(sum, count, _)| Eigenvalue {
                value: sum / count as f64,
                multiplicity: count,
            })
            .collect()
    }

    /// Largest pairwise gap after sorting; `None` if sizes differ.
    pub fn distance(&self, other: &Spectrum) -> Option<f64> {
        (self.len() == other.len()).then(|| {
            self.eigenvalues
                .iter()
                .zip(&other.eigenvalues)
                .fold(0.0f64, |acc, (a, b)| acc.max((a - b).abs()))
        })
    }

    /// Sorted multiset union.
    pub fn union(&self, other: &Spectrum) -> Spectrum {
        Spectrum::new(
            self.eigenvalues
                .iter()
                .chain(&other.eigenvalues)
                .copied()
                .collect(),
        )
    }
}

/// Eigenvalues of `π(A)`.
pub fn pi_spectrum(g: &GainGraph, rep: &Representation) -> Result<Spectrum> {
    if !g.group().same_as(rep.group()) {
        return Err(Error::GroupMismatch);
    }
    let m = rep.fourier_transform(&g.adjacency_matrix())?;
    if m.hermitian_deviation > HERMITIAN_TOLERANCE {
        return Err(Error::NonHermitian(m.hermitian_deviation));
    }
    let sym = (&m.entries + m.entries.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = sym.symmetric_eigen();
    Ok(Spectrum::new(eig.eigenvalues.iter().copied().collect()))
}

/// Equal `Tr(π(A)^h)` for `h ≤ max(n₁,n₂)·deg π`, from exact profiles.
/// Integer-valued characters give an exact decision; otherwise the traces
/// must agree to `tol·(1+|t_h|)`.
pub fn pi_cospectral(
    g1: &GainGraph,
    g2: &GainGraph,
    rep: &Representation,
    tol: f64,
) -> Result<bool> {
    check_same_group(g1, g2)?;
    if !g1.group().same_as(rep.group()) {
        return Err(Error::GroupMismatch);
    }
    if g1.vertex_count() != g2.vertex_count() {
        return Ok(false);
    }
    let hmax = g1.vertex_count() * rep.degree();
    let (p1, p2) = (walk_class_profile(g1, hmax), walk_class_profile(g2, hmax));
    let chi = rep.character()?;
    let diff = |h: usize| -> Vec<BigInt> {
        p1.counts[h]
            .iter()
            .zip(&p2.counts[h])
            .map(|(a, b)| BigInt::from(a.clone()) - BigInt::from(b.clone()))
            .collect()
    };
    if let Some(int_chi) = chi.as_integers(1e-9) {
        return Ok((1..=hmax).all(|h| {
            diff(h)
                .iter()
                .zip(&int_chi)
                .map(|(d, x)| d * x)
                .sum::<BigInt>()
                .is_zero()
        }));
    }
    Ok((1..=hmax).all(|h| {
        let delta: Complex64 = diff(h)
            .iter()
            .zip(chi.values())
            .map(|(d, x)| x * bigint_to_f64(d))
            .sum();
        let t1 = p1.character_sum(h, chi.values());
        delta.norm() <= tol * (1.0 + t1.norm())
    }))
}

/// Characteristic polynomial, coefficients from `x^N` down to `x^0`.
#[derive(Debug, Clone, PartialEq)]
pub struct CharPoly {
    coefficients: Vec<f64>,
    exact: Option<Vec<BigInt>>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    /// Integer coefficients when the traces were integers.
    pub fn exact(&self) -> Option<&[BigInt]> {
        self.exact.as_deref()
    }

    /// Largest coefficient gap; `None` when degrees differ.
    pub fn distance_to(&self, coefficients: &[f64]) -> Option<f64> {
        (coefficients.len() == self.coefficients.len()).then(|| {
            self.coefficients
                .iter()
                .zip(coefficients)
                .fold(0.0f64, |acc, (a, b)| acc.max((a - b).abs()))
        })
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coefficients.iter().fold(0.0, |acc, &c| acc * x + c)
    }
}

/// `det(xI - π(A))` via Newton's identities on `Tr(π(A)^h)`.
pub fn pi_char_poly(g: &GainGraph, rep: &Representation) -> Result<CharPoly> {
    if !g.group().same_as(rep.group()) {
        return Err(Error::GroupMismatch);
    }
    let size = g.vertex_count() * rep.degree();
    let profile = walk_class_profile(g, size);
    let chi = rep.character()?;
    if let Some(int_chi) = chi.as_integers(1e-9) {
        let traces: Vec<BigInt> = (1..=size)
            .map(|h| {
                profile.counts[h]
                    .iter()
                    .zip(&int_chi)
                    .map(|(k, x)| BigInt::from(k.clone()) * x)
                    .sum()
            })
            .collect();
        let exact = newton_exact(&traces);
        let coefficients = exact.iter().map(bigint_to_f64).collect();
        return Ok(CharPoly {
            coefficients,
            exact: Some(exact),
        });
    }
    let traces: Vec<f64> = (1..=size)
        .map(|h| profile.character_sum(h, chi.values()).re)
        .collect();
    let coefficients = newton_float(&traces)
        .into_iter()
        .map(|c| {
            let r = c.round();
            if (c - r).abs() <= COEFFICIENT_ROUNDING {
                r
            } else {
                c
            }
        })
        .collect();
    Ok(CharPoly {
        coefficients,
        exact: None,
    })
}

/// Monic polynomial with power sums `p₁, …, p_N`, descending coefficients.
pub fn newton_exact(power_sums: &[BigInt]) -> Vec<BigInt> {
    let n = power_sums.len();
    let mut e: Vec<BigRational> = vec![BigRational::one()];
    for k in 1..=n {
        let mut acc = BigRational::zero();
        for i in 1..=k {
            let term = &e[k - i] * BigRational::from_integer(power_sums[i - 1].clone());
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc / BigRational::from_integer(BigInt::from(k)));
    }
    e.into_iter()
        .enumerate()
        .map(|(k, ek)| {
            debug_assert!(ek.is_integer(), "power sums of algebraic integers");
            let v = ek.to_integer();
            if k.is_odd() {
                -v
            } else {
                v
            }
        })
        .collect()
}

/// Floating-point Newton identities with compensated summation.
pub fn newton_float(power_sums: &[f64]) -> Vec<f64> {
    let n = power_sums.len();
    let mut e = vec![1.0];
    for k in 1..=n {
        let mut sum = NeumaierSum::default();
        for i in 1..=k {
            let term = e[k - i] * power_sums[i - 1];
            sum.add(if i % 2 == 1 { term } else { -term });
        }
        e.push(sum.value() / k as f64);
    }
    e.into_iter()
        .enumerate()
        .map(|(k, ek)| if k % 2 == 1 { -ek } else { ek })
        .collect()
}

#[derive(Default)]
struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Exact coefficients as `i64` when they fit.
pub fn exact_as_i64(coefficients: &[BigInt]) -> Option<Vec<i64>> {
    coefficients.iter().map(|c| c.to_i64()).collect()
}

/// `Σ |d|` over class-wise profile differences; zero iff profiles agree.
pub fn profile_distance(a: &ClassProfile, b: &ClassProfile) -> BigUint {
    a.counts
        .iter()
        .zip(&b.counts)
        .flat_map(|(x, y)| x.iter().zip(y))
        .map(|(x, y)| {
            (BigInt::from(x.clone()) - BigInt::from(y.clone()))
                .abs()
                .to_biguint()
                .unwrap()
        })
        .sum()
}

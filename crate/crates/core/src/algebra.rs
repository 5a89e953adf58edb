//! Integer group algebra `ZG`, matrices over it, and class functions.

use nalgebra::Complex;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::group::{Element, FiniteGroup};

pub type Complex64 = Complex<f64>;

/// `Σ_x f_x · x` with integer coefficients, one per group element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupAlgebraElement {
    coeffs: Vec<BigInt>,
}

impl GroupAlgebraElement {
    pub fn zero(group: &FiniteGroup) -> Self {
        GroupAlgebraElement {
            coeffs: vec![BigInt::zero(); group.order()],
        }
    }

    /// The basis element `x`.
    pub fn basis(group: &FiniteGroup, x: Element) -> Self {
        let mut f = Self::zero(group);
        f.coeffs[x] = BigInt::one();
        f
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        GroupAlgebraElement { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, x: Element) -> &BigInt {
        &self.coeffs[x]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        GroupAlgebraElement {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Convolution product `(Σ f_x x)(Σ h_y y) = Σ f_x h_y xy`.
    pub fn mul(&self, other: &Self, group: &FiniteGroup) -> Self {
        let mut out = Self::zero(group);
        self.mul_add_into(other, group, &mut out);
        out
    }

    fn mul_add_into(&self, other: &Self, group: &FiniteGroup, out: &mut Self) {
        for (x, fx) in self.coeffs.iter().enumerate() {
            if fx.is_zero() {
                continue;
            }
            for (y, hy) in other.coeffs.iter().enumerate() {
                if hy.is_zero() {
                    continue;
                }
                out.coeffs[group.mul(x, y)] += fx * hy;
            }
        }
    }

    /// `f · x` for a single group element: a permutation of coefficients.
    pub fn mul_element_right(&self, x: Element, group: &FiniteGroup) -> Self {
        let mut out = Self::zero(group);
        for (z, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.coeffs[group.mul(z, x)] += c;
            }
        }
        out
    }

    /// `f* = Σ f_{x⁻¹} x` (coefficients are real).
    pub fn star(&self, group: &FiniteGroup) -> Self {
        let mut out = Self::zero(group);
        for (x, c) in self.coeffs.iter().enumerate() {
            out.coeffs[group.inv(x)] = c.clone();
        }
        out
    }

    /// Sum of coefficients on each conjugacy class, exactly.
    pub fn class_sums(&self, group: &FiniteGroup) -> Vec<BigInt> {
        let mut sums = vec![BigInt::zero(); group.num_classes()];
        for (x, c) in self.coeffs.iter().enumerate() {
            sums[group.class_of(x)] += c;
        }
        sums
    }
}

/// Class projection `μ`: a group-algebra element to the class function
/// holding its coefficient sum on each conjugacy class.
pub fn mu(f: &GroupAlgebraElement, group: &FiniteGroup) -> ClassFunction {
    ClassFunction::new(
        f.class_sums(group)
            .iter()
            .map(|c| Complex64::new(bigint_to_f64(c), 0.0))
            .collect(),
    )
}

/// A complex value per conjugacy class.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassFunction {
    values: Vec<Complex64>,
}

impl ClassFunction {
    pub fn new(values: Vec<Complex64>) -> Self {
        ClassFunction { values }
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn value(&self, class: usize) -> Complex64 {
        self.values[class]
    }

    pub fn at_element(&self, group: &FiniteGroup, g: Element) -> Complex64 {
        self.values[group.class_of(g)]
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction::new(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// `⟨f, h⟩ = (1/|G|) Σ_g f(g) conj(h(g))`.
    pub fn inner(&self, other: &ClassFunction, group: &FiniteGroup) -> Complex64 {
        let sum: Complex64 = self
            .values
            .iter()
            .zip(&other.values)
            .enumerate()
            .map(|(c, (f, h))| f * h.conj() * group.class_size(c) as f64)
            .sum();
        sum / group.order() as f64
    }

    /// Values rounded to integers when every value is within `tol` of one.
    pub fn as_integers(&self, tol: f64) -> Option<Vec<BigInt>> {
        self.values
            .iter()
            .map(|v| {
                let r = v.re.round();
                if (v.re - r).abs() <= tol && v.im.abs() <= tol {
                    Some(BigInt::from(r as i64))
                } else {
                    None
                }
            })
            .collect()
    }
}

/// Square matrix with entries in `ZG`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraMatrix {
    n: usize,
    entries: Vec<GroupAlgebraElement>,
}

impl GroupAlgebraMatrix {
    pub fn zeros(n: usize, group: &FiniteGroup) -> Self {
        GroupAlgebraMatrix {
            n,
            entries: vec![GroupAlgebraElement::zero(group); n * n],
        }
    }

    pub fn identity(n: usize, group: &FiniteGroup) -> Self {
        let mut m = Self::zeros(n, group);
        for i in 0..n {
            m.set(i, i, GroupAlgebraElement::basis(group, group.identity()));
        }
        m
    }

    /// Diagonal matrix with group elements on the diagonal.
    pub fn diagonal(diag: &[Element], group: &FiniteGroup) -> Self {
        let mut m = Self::zeros(diag.len(), group);
        for (i, &g) in diag.iter().enumerate() {
            m.set(i, i, GroupAlgebraElement::basis(group, g));
        }
        m
    }

    /// `P` with `P[i][perm[i]] = 1_G`.
    pub fn permutation(perm: &[usize], group: &FiniteGroup) -> Self {
        let mut m = Self::zeros(perm.len(), group);
        for (i, &j) in perm.iter().enumerate() {
            m.set(i, j, GroupAlgebraElement::basis(group, group.identity()));
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &GroupAlgebraElement {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: GroupAlgebraElement) {
        self.entries[i * self.n + j] = value;
    }

    pub fn mul(&self, other: &Self, group: &FiniteGroup) -> Self {
        assert_eq!(self.n, other.n, "matrix sizes differ");
        let n = self.n;
        let mut out = Self::zeros(n, group);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * n + j;
                    a.mul_add_into(b, group, &mut out.entries[idx]);
                }
            }
        }
        out
    }

    /// `(F*)_{ij} = (F_{ji})*`.
    pub fn star(&self, group: &FiniteGroup) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n, group);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.get(j, i).star(group));
            }
        }
        out
    }

    pub fn trace(&self, group: &FiniteGroup) -> GroupAlgebraElement {
        let mut t = GroupAlgebraElement::zero(group);
        for i in 0..self.n {
            t.add_assign(self.get(i, i));
        }
        t
    }

    pub fn pow(&self, h: usize, group: &FiniteGroup) -> Self {
        let mut acc = Self::identity(self.n, group);
        for _ in 0..h {
            acc = acc.mul(self, group);
        }
        acc
    }
}

pub(crate) fn bigint_to_f64(x: &BigInt) -> f64 {
    num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN)
}

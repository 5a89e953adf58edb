//! Unitary representations of finite groups and Fourier transforms of
//! group-algebra matrices.

use std::collections::VecDeque;
use std::f64::consts::PI;
use std::sync::Arc;

use nalgebra::DMatrix;

use crate::algebra::{bigint_to_f64, ClassFunction, Complex64, GroupAlgebraMatrix};
use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup, GroupKind};

/// Verification tolerance for built-in representations.
pub const BUILTIN_TOLERANCE: f64 = 1e-12;
/// Verification tolerance for user-supplied representations.
pub const USER_TOLERANCE: f64 = 1e-9;

pub type CMatrix = DMatrix<Complex64>;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// A homomorphism `G → U_k(C)` stored as one `k×k` matrix per element.
#[derive(Debug, Clone)]
pub struct Representation {
    group: Arc<FiniteGroup>,
    degree: usize,
    images: Vec<CMatrix>,
    name: String,
}

/// Maximum deviations found by [`Representation::verify`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerificationReport {
    pub identity_deviation: f64,
    pub homomorphism_deviation: f64,
    pub unitarity_deviation: f64,
    pub tolerance: f64,
}

impl VerificationReport {
    pub fn max_deviation(&self) -> f64 {
        self.identity_deviation
            .max(self.homomorphism_deviation)
            .max(self.unitarity_deviation)
    }

    pub fn passed(&self) -> bool {
        self.max_deviation() <= self.tolerance
    }
}

/// `π(A)` for a group-algebra matrix `A`.
#[derive(Debug, Clone)]
pub struct RepresentedMatrix {
    pub entries: CMatrix,
    /// `max |M - M*|` over all entries.
    pub hermitian_deviation: f64,
}

impl RepresentedMatrix {
    pub fn size(&self) -> usize {
        self.entries.nrows()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation <= tol
    }
}

impl Representation {
    /// Wraps raw images without checking them; see [`verify`](Self::verify).
    pub fn from_images(
        group: Arc<FiniteGroup>,
        name: impl Into<String>,
        images: Vec<CMatrix>,
    ) -> Result<Self> {
        if images.len() != group.order() {
            return Err(Error::Representation(format!(
                "{} images for a group of order {}",
                images.len(),
                group.order()
            )));
        }
        let degree = images.first().map_or(0, |m| m.nrows());
        if degree == 0
            || images
                .iter()
                .any(|m| m.nrows() != degree || m.ncols() != degree)
        {
            return Err(Error::Representation(
                "images must be square of one degree".into(),
            ));
        }
        Ok(Representation {
            group,
            degree,
            images,
            name: name.into(),
        })
    }

    /// `π₀(g) = 1`.
    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        let images = vec![CMatrix::from_element(1, 1, c(1.0)); group.order()];
        Representation {
            group,
            degree: 1,
            images,
            name: "trivial".into(),
        }
    }

    /// Left regular representation: `λ(g) e_x = e_{g·x}`.
    pub fn regular(group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        let images = group
            .elements()
            .map(|g| {
                let mut m = CMatrix::zeros(n, n);
                for x in group.elements() {
                    m[(group.mul(g, x), x)] = c(1.0);
                }
                m
            })
            .collect();
        Representation {
            group,
            degree: n,
            images,
            name: "regular".into(),
        }
    }

    /// `π_j(g^i) = exp(2πi·ij/m)` on a fresh cyclic group of order `m`.
    pub fn cyclic_irrep(m: usize, j: usize) -> Result<Self> {
        Self::cyclic_irrep_over(Arc::new(FiniteGroup::cyclic(m)?), j)
    }

    /// `π_j` over an existing cyclic group.
    pub fn cyclic_irrep_over(group: Arc<FiniteGroup>, j: usize) -> Result<Self> {
        let m = match group.kind() {
            GroupKind::Cyclic(m) => m,
            _ => {
                return Err(Error::InvalidArgument(
                    "cyclic irreps need a cyclic group".into(),
                ))
            }
        };
        if j >= m {
            return Err(Error::InvalidArgument(format!(
                "irrep index {j} out of range for order {m}"
            )));
        }
        let images = (0..m)
            .map(|i| {
                // reduce the exponent first so the angle stays small
                let k = (i * j) % m;
                let theta = 2.0 * PI * k as f64 / m as f64;
                CMatrix::from_element(1, 1, Complex64::from_polar(1.0, theta))
            })
            .collect();
        Ok(Representation {
            group,
            degree: 1,
            images,
            name: format!("cyclic:{j}"),
        })
    }

    /// Standard representation of S4 from the images of `(12)` and `(1234)`.
    pub fn s4_standard() -> Result<Self> {
        let group = Arc::new(FiniteGroup::symmetric(4)?);
        Self::s4_from_generators(group, "s4-standard", 1.0)
    }

    /// Standard representation tensored with the sign representation.
    pub fn s4_standard_alt() -> Result<Self> {
        let group = Arc::new(FiniteGroup::symmetric(4)?);
        Self::s4_from_generators(group, "s4-standard-alt", -1.0)
    }

    fn s4_from_generators(group: Arc<FiniteGroup>, name: &str, sign: f64) -> Result<Self> {
        if group.kind() != GroupKind::Symmetric(4) {
            return Err(Error::InvalidArgument(format!("{name} needs the group S4")));
        }
        let s3 = 3f64.sqrt();
        let s2 = 2f64.sqrt();
        let s6 = 6f64.sqrt();
        let transposition = CMatrix::from_row_slice(
            3,
            3,
            &[
                c(-1.0),
                c(0.0),
                c(0.0),
                c(0.0),
                c(1.0),
                c(0.0),
                c(0.0),
                c(0.0),
                c(1.0),
            ],
        );
        let four_cycle = CMatrix::from_row_slice(
            3,
            3,
            &[
                c(-0.5),
                c(s3 / 2.0),
                c(0.0),
                c(-s3 / 6.0),
                c(-1.0 / 6.0),
                c(2.0 * s2 / 3.0),
                c(-s6 / 3.0),
                c(-s2 / 3.0),
                c(-1.0 / 3.0),
            ],
        );
        let t = group.parse_element("(12)")?;
        let r = group.parse_element("(1234)")?;
        let gens = vec![(t, transposition * c(sign)), (r, four_cycle * c(sign))];
        let rep = Self::from_generators(group, name, &gens)?;
        let report = rep.verify(BUILTIN_TOLERANCE);
        if !report.passed() {
            return Err(Error::Representation(format!(
                "{name} fails verification (deviation {:e})",
                report.max_deviation()
            )));
        }
        Ok(rep)
    }

    /// Extends generator images to the whole group along a breadth-first
    /// search of the Cayley graph, multiplying images left to right.
    pub fn from_generators(
        group: Arc<FiniteGroup>,
        name: &str,
        generators: &[(Element, CMatrix)],
    ) -> Result<Self> {
        let degree = generators
            .first()
            .map(|(_, m)| m.nrows())
            .ok_or_else(|| Error::Representation("no generators".into()))?;
        let mut images: Vec<Option<CMatrix>> = vec![None; group.order()];
        images[group.identity()] = Some(CMatrix::identity(degree, degree));
        let mut queue = VecDeque::from([group.identity()]);
        while let Some(g) = queue.pop_front() {
            for (s, ms) in generators {
                let h = group.mul(g, *s);
                if images[h].is_none() {
                    let img = images[g].as_ref().unwrap() * ms;
                    images[h] = Some(img);
                    queue.push_back(h);
                }
            }
        }
        let images: Vec<CMatrix> = images
            .into_iter()
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Representation("generators do not generate the group".into()))?;
        Self::from_images(group, name, images)
    }

    /// Resolves a representation name: `trivial`, `regular`, `sign`,
    /// `cyclic:<j>`, `s4-standard`, `s4-standard-alt`, and `+`-separated
    /// direct sums of these.
    pub fn from_name(name: &str, group: &Arc<FiniteGroup>) -> Result<Self> {
        let mut parts = name.split('+').map(str::trim);
        let first = parts.next().unwrap_or_default();
        let mut rep = Self::single_from_name(first, group)?;
        for part in parts {
            rep = rep.direct_sum(&Self::single_from_name(part, group)?)?;
        }
        Ok(rep)
    }

    fn single_from_name(name: &str, group: &Arc<FiniteGroup>) -> Result<Self> {
        let rep = match name {
            "trivial" => Self::trivial(group.clone()),
            "regular" => Self::regular(group.clone()),
            "sign" => {
                if group.kind() != GroupKind::Cyclic(2) {
                    return Err(Error::InvalidArgument("`sign` needs the group C2".into()));
                }
                let mut rep = Self::cyclic_irrep_over(group.clone(), 1)?;
                rep.name = "sign".into();
                rep
            }
            "s4-standard" | "s4-standard-alt" => {
                let sign = if name == "s4-standard" { 1.0 } else { -1.0 };
                Self::s4_from_generators(group.clone(), name, sign)?
            }
            _ => match name.strip_prefix("cyclic:") {
                Some(j) => {
                    let j: usize = j.parse().map_err(|_| {
                        Error::InvalidArgument(format!("bad cyclic irrep index in `{name}`"))
                    })?;
                    Self::cyclic_irrep_over(group.clone(), j)?
                }
                None => {
                    return Err(Error::InvalidArgument(format!(
                        "unknown representation `{name}`"
                    )))
                }
            },
        };
        Ok(rep)
    }

    /// Reads a user representation: degree `k`, then for each element in
    /// index order `2k²` reals (row-major, real and imaginary interleaved).
    /// The result is verified at [`USER_TOLERANCE`].
    pub fn parse(text: &str, group: Arc<FiniteGroup>, name: &str) -> Result<Self> {
        let mut tokens = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .flat_map(str::split_whitespace);
        let bad = |what: &str| Error::Representation(format!("representation file: {what}"));
        let degree: usize = tokens
            .next()
            .ok_or_else(|| bad("missing degree"))?
            .parse()
            .map_err(|_| bad("degree is not an integer"))?;
        if degree == 0 {
            return Err(bad("degree must be positive"));
        }
        let mut images = Vec::with_capacity(group.order());
        for g in group.elements() {
            let mut m = CMatrix::zeros(degree, degree);
            for i in 0..degree {
                for j in 0..degree {
                    let mut next = || -> Result<f64> {
                        tokens
                            .next()
                            .ok_or_else(|| bad(&format!("missing entries for element {g}")))?
                            .parse()
                            .map_err(|_| bad("entry is not a real number"))
                    };
                    let re = next()?;
                    let im = next()?;
                    m[(i, j)] = Complex64::new(re, im);
                }
            }
            images.push(m);
        }
        if tokens.next().is_some() {
            return Err(bad("trailing data"));
        }
        let rep = Self::from_images(group, name, images)?;
        let report = rep.verify(USER_TOLERANCE);
        if !report.passed() {
            return Err(Error::Representation(format!(
                "{name} is not a unitary representation (deviation {:e})",
                report.max_deviation()
            )));
        }
        Ok(rep)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn image(&self, g: Element) -> &CMatrix {
        &self.images[g]
    }

    pub fn images(&self) -> &[CMatrix] {
        &self.images
    }

    /// Replace one image; intended for constructing faults in tests.
    pub fn set_image(&mut self, g: Element, image: CMatrix) {
        self.images[g] = image;
    }

    /// Block-diagonal direct sum `π₁ ⊕ π₂`.
    pub fn direct_sum(&self, other: &Representation) -> Result<Self> {
        if !self.group.same_as(&other.group) {
            return Err(Error::GroupMismatch);
        }
        let (k1, k2) = (self.degree, other.degree);
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| {
                let mut m = CMatrix::zeros(k1 + k2, k1 + k2);
                m.view_mut((0, 0), (k1, k1)).copy_from(a);
                m.view_mut((k1, k1), (k2, k2)).copy_from(b);
                m
            })
            .collect();
        Ok(Representation {
            group: self.group.clone(),
            degree: k1 + k2,
            images,
            name: format!("{}+{}", self.name, other.name),
        })
    }

    /// Checks the identity image, the homomorphism property on all pairs,
    /// and unitarity of every image.
    pub fn verify(&self, tol: f64) -> VerificationReport {
        let k = self.degree;
        let eye = CMatrix::identity(k, k);
        let identity_deviation = max_abs(&(&self.images[self.group.identity()] - &eye));
        let mut unitarity_deviation: f64 = 0.0;
        for m in &self.images {
            unitarity_deviation = unitarity_deviation.max(max_abs(&(m * m.adjoint() - &eye)));
        }
        let mut homomorphism_deviation: f64 = 0.0;
        for a in self.group.elements() {
            for b in self.group.elements() {
                let lhs = &self.images[self.group.mul(a, b)];
                let rhs = &self.images[a] * &self.images[b];
                homomorphism_deviation = homomorphism_deviation.max(max_abs(&(lhs - rhs)));
            }
        }
        VerificationReport {
            identity_deviation,
            homomorphism_deviation,
            unitarity_deviation,
            tolerance: tol,
        }
    }

    /// `χ(g) = Tr π(g)`, one value per class; fails if the traces vary
    /// within a class by more than `1e-9`.
    pub fn character(&self) -> Result<ClassFunction> {
        let group = &self.group;
        let mut values = Vec::with_capacity(group.num_classes());
        for (ci, class) in group.classes().iter().enumerate() {
            let first = self.images[class[0]].trace();
            for &g in &class[1..] {
                let dev = (self.images[g].trace() - first).norm();
                if dev > 1e-9 {
                    return Err(Error::ClassInconstant {
                        class: ci,
                        deviation: dev,
                    });
                }
            }
            values.push(first);
        }
        Ok(ClassFunction::new(values))
    }

    /// Elements whose image is the identity matrix within `tol`.
    pub fn kernel(&self, tol: f64) -> Vec<Element> {
        let k = self.degree;
        let eye = CMatrix::identity(k, k);
        self.group
            .elements()
            .filter(|&g| max_abs(&(&self.images[g] - &eye)) <= tol)
            .collect()
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel(1e-9).len() == 1
    }

    /// Fourier transform at `π`: each entry `Σ f_x x` becomes the block
    /// `Σ f_x π(x)`.
    pub fn fourier_transform(&self, a: &GroupAlgebraMatrix) -> Result<RepresentedMatrix> {
        let n = a.size();
        let k = self.degree;
        let order = self.group.order();
        let mut m = CMatrix::zeros(n * k, n * k);
        for i in 0..n {
            for j in 0..n {
                let entry = a.get(i, j);
                if entry.coeffs().len() != order {
                    return Err(Error::GroupMismatch);
                }
                for (x, coeff) in entry.coeffs().iter().enumerate() {
                    if coeff.sign() == num_bigint::Sign::NoSign {
                        continue;
                    }
                    let w = bigint_to_f64(coeff);
                    let mut block = m.view_mut((i * k, j * k), (k, k));
                    block += &self.images[x] * c(w);
                }
            }
        }
        let hermitian_deviation = max_abs(&(&m - m.adjoint()));
        Ok(RepresentedMatrix {
            entries: m,
            hermitian_deviation,
        })
    }
}

pub(crate) fn max_abs(m: &CMatrix) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

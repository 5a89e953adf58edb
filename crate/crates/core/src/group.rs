//! Finite groups given by dense element indices.
//!
//! Elements are `usize` indices in `0..order`. Products follow the
//! left-to-right convention: `mul(a, b)` is "apply `a`, then `b`" for
//! permutation groups. Small groups keep an explicit Cayley table; cyclic
//! groups and large symmetric groups compute products on demand.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Index of a group element.
pub type Element = usize;

/// Largest symmetric degree accepted by [`FiniteGroup::symmetric`].
pub const MAX_SYMMETRIC_DEGREE: usize = 8;

/// Groups up to this order get a materialized Cayley table.
const TABLE_LIMIT: usize = 1024;

/// Tables above this order may skip the O(N^3) associativity check.
pub const ASSOCIATIVITY_SKIP_THRESHOLD: usize = 256;

/// How the group was described, which also fixes the element literal syntax.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Cyclic(usize),
    Symmetric(usize),
    Table,
}

#[derive(Debug, Clone)]
enum Product {
    Table(Vec<u32>),
    Cyclic,
    Permutations { perms: Vec<Vec<u8>> },
}

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    kind: GroupKind,
    order: usize,
    product: Product,
    inv: Vec<Element>,
    identity: Element,
    names: Vec<String>,
    name_index: HashMap<String, Element>,
    classes: Vec<Vec<Element>>,
    class_of: Vec<usize>,
}

/// Options for [`FiniteGroup::from_table_with`].
#[derive(Debug, Clone, Copy, Default)]
pub struct TableOptions {
    /// Only honoured for tables with more than
    /// [`ASSOCIATIVITY_SKIP_THRESHOLD`] elements.
    pub skip_associativity: bool,
}

impl FiniteGroup {
    /// Cyclic group of order `m`; element `i` stands for `g^i`.
    pub fn cyclic(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument(
                "cyclic group order must be at least 1".into(),
            ));
        }
        let names: Vec<String> = (0..m)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        let inv = (0..m).map(|i| (m - i) % m).collect();
        let classes: Vec<Vec<Element>> = (0..m).map(|i| vec![i]).collect();
        let class_of = (0..m).collect();
        Ok(Self::assemble(
            GroupKind::Cyclic(m),
            m,
            Product::Cyclic,
            inv,
            0,
            names,
            classes,
            class_of,
        ))
    }

    /// Symmetric group on `{1..n}`, elements in lexicographic order of their
    /// one-line notation (so the identity is element 0).
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_SYMMETRIC_DEGREE {
            return Err(Error::InvalidArgument(format!(
                "symmetric degree must be in 1..={MAX_SYMMETRIC_DEGREE}, got {n}"
            )));
        }
        let perms = all_permutations(n);
        let order = perms.len();
        let names: Vec<String> = perms.iter().map(|p| cycle_notation(p)).collect();
        let inv = perms
            .iter()
            .map(|p| {
                let mut q = vec![0u8; n];
                for (i, &pi) in p.iter().enumerate() {
                    q[pi as usize] = i as u8;
                }
                permutation_rank(&q)
            })
            .collect();

        // Conjugacy classes of S_n are the cycle types.
        let mut type_to_class: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut classes: Vec<Vec<Element>> = Vec::new();
        let mut class_of = vec![0; order];
        for (idx, p) in perms.iter().enumerate() {
            let ty = cycle_type(p);
            let next = classes.len();
            let c = *type_to_class.entry(ty).or_insert(next);
            if c == classes.len() {
                classes.push(Vec::new());
            }
            classes[c].push(idx);
            class_of[idx] = c;
        }

        let product = if order <= TABLE_LIMIT {
            let mut table = vec![0u32; order * order];
            for a in 0..order {
                for b in 0..order {
                    table[a * order + b] = permutation_rank(&compose(&perms[a], &perms[b])) as u32;
                }
            }
            Product::Table(table)
        } else {
            Product::Permutations { perms }
        };
        Ok(Self::assemble(
            GroupKind::Symmetric(n),
            order,
            product,
            inv,
            0,
            names,
            classes,
            class_of,
        ))
    }

    /// Validated group from an explicit Cayley table, `table[a][b] = a·b`.
    pub fn from_table(table: &[Vec<usize>], names: Option<Vec<String>>) -> Result<Self> {
        Self::from_table_with(table, names, TableOptions::default())
    }

    pub fn from_table_with(
        table: &[Vec<usize>],
        names: Option<Vec<String>>,
        options: TableOptions,
    ) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if order > u32::MAX as usize {
            return Err(Error::NotAGroup("table too large".into()));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (a, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::NotAGroup(format!(
                    "row {a} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for (b, &c) in row.iter().enumerate() {
                if c >= order {
                    return Err(Error::NotAGroup(format!(
                        "entry {a}*{b} = {c} is out of range"
                    )));
                }
                flat.push(c as u32);
            }
        }
        let at = |a: usize, b: usize| flat[a * order + b] as usize;

        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::NotAGroup("no two-sided identity".into()))?;

        let mut inv = Vec::with_capacity(order);
        for x in 0..order {
            let y = (0..order)
                .find(|&y| at(x, y) == identity && at(y, x) == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {x} has no inverse")))?;
            inv.push(y);
        }

        let skip = options.skip_associativity && order > ASSOCIATIVITY_SKIP_THRESHOLD;
        if !skip {
            for a in 0..order {
                for b in 0..order {
                    let ab = at(a, b);
                    for c in 0..order {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(Error::NotAGroup(format!(
                                "associativity fails for ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        }

        let names = match names {
            Some(names) => {
                if names.len() != order {
                    return Err(Error::NotAGroup(format!(
                        "{} names given for {order} elements",
                        names.len()
                    )));
                }
                names
            }
            None => (0..order)
                .map(|i| {
                    if i == identity {
                        "e".to_string()
                    } else {
                        format!("#{i}")
                    }
                })
                .collect(),
        };

        let (classes, class_of) = brute_force_classes(order, identity, &inv, at);
        Ok(Self::assemble(
            GroupKind::Table,
            order,
            Product::Table(flat),
            inv,
            identity,
            names,
            classes,
            class_of,
        ))
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble(
        kind: GroupKind,
        order: usize,
        product: Product,
        inv: Vec<Element>,
        identity: Element,
        names: Vec<String>,
        mut classes: Vec<Vec<Element>>,
        mut class_of: Vec<usize>,
    ) -> Self {
        // identity class first, remaining classes by smallest member
        let id_class = class_of[identity];
        if id_class != 0 {
            classes.swap(0, id_class);
            for c in class_of.iter_mut() {
                if *c == 0 {
                    *c = id_class;
                } else if *c == id_class {
                    *c = 0;
                }
            }
        }
        let name_index = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        FiniteGroup {
            kind,
            order,
            product,
            inv,
            identity,
            names,
            name_index,
            classes,
            class_of,
        }
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        match &self.product {
            Product::Table(t) => t[a * self.order + b] as usize,
            Product::Cyclic => {
                let s = a + b;
                if s >= self.order {
                    s - self.order
                } else {
                    s
                }
            }
            Product::Permutations { perms } => permutation_rank(&compose(&perms[a], &perms[b])),
        }
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        self.inv[a]
    }

    /// `x⁻¹ g x`.
    pub fn conj(&self, g: Element, x: Element) -> Element {
        self.mul(self.mul(self.inv[x], g), x)
    }

    pub fn pow(&self, g: Element, k: usize) -> Element {
        let mut acc = self.identity;
        let mut base = g;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Order of `g`, the least `k ≥ 1` with `g^k = e`.
    pub fn element_order(&self, g: Element) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Ordered product of a sequence of elements.
    pub fn product<I: IntoIterator<Item = Element>>(&self, items: I) -> Element {
        items
            .into_iter()
            .fold(self.identity, |acc, x| self.mul(acc, x))
    }

    pub fn name(&self, g: Element) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn classes(&self) -> &[Vec<Element>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, g: Element) -> usize {
        self.class_of[g]
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    /// Display name of a class: the name of its first member.
    pub fn class_name(&self, c: usize) -> &str {
        self.name(self.classes[c][0])
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order
    }

    /// Every element is conjugate to its inverse.
    pub fn is_ambivalent(&self) -> bool {
        self.elements()
            .all(|g| self.class_of[g] == self.class_of[self.inv[g]])
    }

    pub fn centralizer_order(&self, g: Element) -> usize {
        self.order / self.class_size(self.class_of[g])
    }

    /// Some `x` with `x⁻¹ a_i x = b_i` for every `i`, searching the identity
    /// first and then all elements in index order.
    pub fn simultaneously_conjugate(&self, a: &[Element], b: &[Element]) -> Option<Element> {
        assert_eq!(a.len(), b.len(), "tuples must have equal length");
        if a.iter()
            .zip(b)
            .any(|(&x, &y)| self.class_of[x] != self.class_of[y])
        {
            return None;
        }
        std::iter::once(self.identity)
            .chain(self.elements().filter(|&x| x != self.identity))
            .find(|&x| a.iter().zip(b).all(|(&ai, &bi)| self.conj(ai, x) == bi))
    }

    /// Number of orbits of `G` acting on `G^k` by simultaneous conjugation,
    /// via Burnside: `(1/|G|) Σ_g |C_G(g)|^k`.
    pub fn count_simultaneous_conjugacy_classes(&self, k: u32) -> BigUint {
        let mut total = BigUint::zero();
        for class in &self.classes {
            let centralizer = BigUint::from(self.order / class.len());
            total += centralizer.pow(k) * BigUint::from(class.len());
        }
        debug_assert!((&total % self.order).is_zero());
        total / self.order
    }

    /// Parse an element literal: `e`, `g^k` for cyclic groups, disjoint
    /// cycles such as `(12)(34)` for symmetric groups, `#k` for any group,
    /// or an exact element name.
    pub fn parse_element(&self, literal: &str) -> Result<Element> {
        let lit = literal.trim();
        let unknown = || Error::UnknownElement(lit.to_string());
        if lit == "e" {
            return Ok(self.identity);
        }
        if let Some(rest) = lit.strip_prefix('#') {
            let idx: usize = rest.parse().map_err(|_| unknown())?;
            return if idx < self.order {
                Ok(idx)
            } else {
                Err(unknown())
            };
        }
        match self.kind {
            GroupKind::Cyclic(m) => {
                if lit == "g" {
                    return Ok(1 % m);
                }
                if let Some(exp) = lit.strip_prefix("g^") {
                    let k: i64 = exp.parse().map_err(|_| unknown())?;
                    return Ok(k.rem_euclid(m as i64) as usize);
                }
            }
            GroupKind::Symmetric(n) => {
                if lit.starts_with('(') {
                    let perm = parse_cycles(lit, n).ok_or_else(unknown)?;
                    return self
                        .name_index
                        .get(&cycle_notation(&perm))
                        .copied()
                        .ok_or_else(unknown);
                }
            }
            GroupKind::Table => {}
        }
        self.name_index.get(lit).copied().ok_or_else(unknown)
    }

    /// Literal that [`parse_element`](Self::parse_element) maps back to `g`.
    pub fn literal(&self, g: Element) -> String {
        match self.kind {
            GroupKind::Cyclic(_) => {
                if g == 0 {
                    "e".into()
                } else {
                    format!("g^{g}")
                }
            }
            GroupKind::Symmetric(_) => self.names[g].clone(),
            GroupKind::Table => {
                if g == self.identity {
                    "e".into()
                } else {
                    format!("#{g}")
                }
            }
        }
    }

    /// Header line of the gain-graph grammar for groups that have one.
    pub fn spec_line(&self) -> Option<String> {
        match self.kind {
            GroupKind::Cyclic(m) => Some(format!("group cyclic {m}")),
            GroupKind::Symmetric(n) => Some(format!("group symmetric {n}")),
            GroupKind::Table => None,
        }
    }

    /// Structural equality: same order, identity and products.
    pub fn same_as(&self, other: &FiniteGroup) -> bool {
        if std::ptr::eq(self, other) {
            return true;
        }
        if self.order != other.order || self.identity != other.identity {
            return false;
        }
        match (self.kind, other.kind) {
            (GroupKind::Cyclic(a), GroupKind::Cyclic(b)) => a == b,
            (GroupKind::Symmetric(a), GroupKind::Symmetric(b)) => a == b,
            _ => self
                .elements()
                .all(|a| other.elements().all(|b| self.mul(a, b) == other.mul(a, b))),
        }
    }

    /// Materialized Cayley table (rows `a`, columns `b`, entry `a·b`).
    pub fn cayley_table(&self) -> Vec<Vec<Element>> {
        self.elements()
            .map(|a| self.elements().map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// Permutation (0-based one-line notation) of a symmetric-group element.
    pub fn permutation(&self, g: Element) -> Option<Vec<usize>> {
        let n = match self.kind {
            GroupKind::Symmetric(n) => n,
            _ => return None,
        };
        let perm = match &self.product {
            Product::Permutations { perms } => perms[g].clone(),
            _ => nth_permutation(n, g),
        };
        Some(perm.into_iter().map(usize::from).collect())
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GroupKind::Cyclic(m) => write!(f, "C{m}"),
            GroupKind::Symmetric(n) => write!(f, "S{n}"),
            GroupKind::Table => write!(f, "group of order {}", self.order),
        }
    }
}

fn brute_force_classes(
    order: usize,
    identity: Element,
    inv: &[Element],
    mul: impl Fn(Element, Element) -> Element,
) -> (Vec<Vec<Element>>, Vec<usize>) {
    const UNSET: usize = usize::MAX;
    let mut class_of = vec![UNSET; order];
    let mut classes = Vec::new();
    let seeds = std::iter::once(identity).chain((0..order).filter(|&g| g != identity));
    for g in seeds {
        if class_of[g] != UNSET {
            continue;
        }
        let c = classes.len();
        let mut members = Vec::new();
        for (x, &xi) in inv.iter().enumerate() {
            let h = mul(mul(xi, g), x);
            if class_of[h] == UNSET {
                class_of[h] = c;
                members.push(h);
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    (classes, class_of)
}

fn all_permutations(n: usize) -> Vec<Vec<u8>> {
    let total: usize = (1..=n).product();
    (0..total).map(|r| nth_permutation(n, r)).collect()
}

/// Permutation of lexicographic rank `r` (0-based images).
fn nth_permutation(n: usize, mut r: usize) -> Vec<u8> {
    let mut pool: Vec<u8> = (0..n as u8).collect();
    let mut fact: usize = (1..n).product::<usize>().max(1);
    let mut out = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let idx = r / fact;
        r %= fact;
        out.push(pool.remove(idx));
        if i > 0 {
            fact /= i;
        }
    }
    out
}

fn permutation_rank(p: &[u8]) -> usize {
    let n = p.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

/// `a` then `b`.
fn compose(a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().map(|&x| b[x as usize]).collect()
}

fn cycles_of(p: &[u8]) -> Vec<Vec<usize>> {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start] as usize;
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x] as usize;
        }
        cycles.push(cycle);
    }
    cycles
}

fn cycle_type(p: &[u8]) -> Vec<usize> {
    let mut ty: Vec<usize> = cycles_of(p).iter().map(Vec::len).collect();
    ty.sort_unstable();
    ty
}

fn cycle_notation(p: &[u8]) -> String {
    let mut s = String::new();
    for cycle in cycles_of(p).into_iter().filter(|c| c.len() > 1) {
        s.push('(');
        for x in cycle {
            s.push_str(&(x + 1).to_string());
        }
        s.push(')');
    }
    if s.is_empty() {
        s.push('e');
    }
    s
}

fn parse_cycles(lit: &str, n: usize) -> Option<Vec<u8>> {
    let mut perm: Vec<u8> = (0..n as u8).collect();
    let mut used = vec![false; n];
    let mut rest = lit;
    while !rest.is_empty() {
        let body = rest.strip_prefix('(')?;
        let close = body.find(')')?;
        let points: Vec<usize> = body[..close]
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect::<Option<_>>()?;
        if points.is_empty() {
            return None;
        }
        for &pt in &points {
            if pt == 0 || pt > n || used[pt - 1] {
                return None;
            }
            used[pt - 1] = true;
        }
        for (i, &pt) in points.iter().enumerate() {
            let next = points[(i + 1) % points.len()];
            perm[pt - 1] = (next - 1) as u8;
        }
        rest = &body[close + 1..];
    }
    Some(perm)
}

//! Exponent-vector monomials, admissible orderings, and sorted monomial sets.
//!
//! A monomial x_1^{d_1}···x_n^{d_n} is represented by its exponent vector
//! (d_1,…,d_n).  The variable order is fixed once and for all as
//! x_1 > x_2 > … > x_n; index 0 in the exponent vector is x_1, the greatest
//! variable.  All three orderings compare under this convention.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest supported arity.  Separations are stored as 32-bit variable masks.
pub const MAX_VARS: usize = 32;

/// A monomial as a vector of non-negative exponents, one per variable.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    /// Builds a monomial from its exponent vector.
    pub fn new(exps: Vec<u32>) -> Self {
        assert!(!exps.is_empty(), "monomial arity must be at least 1");
        Monomial { exps }
    }

    /// The constant monomial 1 in `arity` variables.
    pub fn one(arity: usize) -> Self {
        Monomial::new(vec![0; arity])
    }

    /// Number of variables.
    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Degree of the variable at `var` (0-based; 0 is x_1).
    pub fn deg(&self, var: usize) -> u32 {
        self.exps[var]
    }

    /// The exponent vector.
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Componentwise maximum: the least common multiple.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.arity(), other.arity(), "arity mismatch in lcm");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    /// Conventional divisibility: true iff `self[i] <= other[i]` for all i.
    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.arity(), other.arity(), "arity mismatch in divides");
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// Prolongation by one variable: increments the exponent at `var`.
    pub fn multiply(&self, var: usize) -> Monomial {
        assert!(var < self.arity(), "variable index {var} out of range");
        let mut exps = self.exps.clone();
        exps[var] = exps[var]
            .checked_add(1)
            .expect("exponent overflow in multiply");
        Monomial { exps }
    }

    /// Indices of the variables occurring in `self/divisor` (0-based).
    /// Assumes `divisor` divides `self`.
    pub fn quotient_support<'a>(
        &'a self,
        divisor: &'a Monomial,
    ) -> impl Iterator<Item = usize> + 'a {
        debug_assert!(divisor.divides(self));
        self.exps
            .iter()
            .zip(&divisor.exps)
            .enumerate()
            .filter(|(_, (&a, &b))| a > b)
            .map(|(i, _)| i)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// The three admissible monomial orderings, all compatible with
/// x_1 > x_2 > … > x_n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderingKind {
    Lex,
    DegLex,
    DegRevLex,
}

impl OrderingKind {
    pub const ALL: [OrderingKind; 3] =
        [OrderingKind::Lex, OrderingKind::DegLex, OrderingKind::DegRevLex];

    /// Total-order comparison of two monomials of equal arity.
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(a.arity(), b.arity(), "arity mismatch in compare");
        match self {
            OrderingKind::Lex => lex(a, b),
            OrderingKind::DegLex => a.degree().cmp(&b.degree()).then_with(|| lex(a, b)),
            OrderingKind::DegRevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex(a, b)),
        }
    }
}

impl fmt::Display for OrderingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderingKind::Lex => write!(f, "lex"),
            OrderingKind::DegLex => write!(f, "deglex"),
            OrderingKind::DegRevLex => write!(f, "degrevlex"),
        }
    }
}

impl std::str::FromStr for OrderingKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" => Ok(OrderingKind::Lex),
            "deglex" => Ok(OrderingKind::DegLex),
            "degrevlex" => Ok(OrderingKind::DegRevLex),
            other => Err(format!(
                "unknown ordering `{other}` (expected lex, deglex or degrevlex)"
            )),
        }
    }
}

fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exponents().iter().zip(b.exponents()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Reverse-lexicographic tie-break: the monomial whose last differing
/// exponent is smaller is the greater one.
pub(crate) fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

/// A duplicate-free list of monomials of common arity, kept sorted in
/// strictly decreasing order under a fixed ordering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialSet {
    arity: usize,
    order: OrderingKind,
    items: Vec<Monomial>,
}

impl MonomialSet {
    /// An empty set over `arity` variables.
    pub fn empty(arity: usize, order: OrderingKind) -> Self {
        assert!((1..=MAX_VARS).contains(&arity), "arity must be in 1..={MAX_VARS}");
        MonomialSet { arity, order, items: Vec::new() }
    }

    /// Builds a set from arbitrary monomials: sorts decreasingly and drops
    /// duplicates.
    pub fn from_monomials(
        arity: usize,
        order: OrderingKind,
        monomials: impl IntoIterator<Item = Monomial>,
    ) -> Self {
        let mut set = MonomialSet::empty(arity, order);
        for m in monomials {
            if !set.contains(&m) {
                set.insert(m);
            }
        }
        set
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn sort_order(&self) -> OrderingKind {
        self.order
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Monomial> {
        self.items.iter()
    }

    pub fn get(&self, index: usize) -> &Monomial {
        &self.items[index]
    }

    pub fn as_slice(&self) -> &[Monomial] {
        &self.items
    }

    /// Position of `m` in the decreasing order, `Ok` when present.
    pub fn search(&self, m: &Monomial) -> Result<usize, usize> {
        self.items
            .binary_search_by(|probe| self.order.compare(m, probe))
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.search(m).is_ok()
    }

    /// Inserts `m` at its sorted position.  Inserting an existing element is
    /// a silent no-op (flagged in debug builds), returning false.
    pub fn insert(&mut self, m: Monomial) -> bool {
        assert_eq!(m.arity(), self.arity, "arity mismatch in insert");
        match self.search(&m) {
            Ok(_) => {
                debug_assert!(false, "duplicate insertion of {m}");
                false
            }
            Err(pos) => {
                self.items.insert(pos, m);
                true
            }
        }
    }

    /// The same set re-sorted under another ordering.
    pub fn resorted(&self, order: OrderingKind) -> MonomialSet {
        let mut items = self.items.clone();
        items.sort_by(|a, b| order.compare(b, a));
        MonomialSet { arity: self.arity, order, items }
    }

    /// True when both sets contain exactly the same monomials, regardless of
    /// their sort orders.
    pub fn same_monomials(&self, other: &MonomialSet) -> bool {
        if self.arity != other.arity || self.len() != other.len() {
            return false;
        }
        self.items.iter().all(|m| other.contains(m))
    }

    /// Conventional autoreduction: keeps exactly the elements that are not
    /// properly divisible by another element.  The result generates the same
    /// monomial ideal.
    pub fn autoreduce(&self) -> MonomialSet {
        let kept = self
            .items
            .iter()
            .filter(|u| {
                !self
                    .items
                    .iter()
                    .any(|v| v != *u && v.divides(u))
            })
            .cloned()
            .collect::<Vec<_>>();
        MonomialSet { arity: self.arity, order: self.order, items: kept }
    }

    /// Largest total degree in the set, 0 when empty.
    pub fn max_degree(&self) -> u32 {
        self.items.iter().map(Monomial::degree).max().unwrap_or(0)
    }
}

impl<'a> IntoIterator for &'a MonomialSet {
    type Item = &'a Monomial;
    type IntoIter = std::slice::Iter<'a, Monomial>;
    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}

/// Canonical text form: `vars n` followed by one exponent row per monomial
/// in the set's decreasing order.  `parse ∘ print` is the identity on
/// canonical files.
impl fmt::Display for MonomialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars {}", self.arity)?;
        for m in &self.items {
            let row = m
                .exponents()
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

/// Error raised while parsing the text monomial format.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

/// Parses the text monomial format.
///
/// The first non-comment line must be `vars n`; every following non-comment
/// line holds n whitespace-separated non-negative integers.  `#` starts a
/// comment anywhere on a line.  The monomials are returned sorted under
/// `order`.
pub fn parse_monomial_set(input: &str, order: OrderingKind) -> Result<MonomialSet, ParseError> {
    let mut set: Option<MonomialSet> = None;
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match &mut set {
            None => {
                let Some(rest) = line.strip_prefix("vars") else {
                    return Err(ParseError::new(line_no, "expected `vars n` header"));
                };
                let n: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| ParseError::new(line_no, "invalid variable count"))?;
                if n == 0 || n > MAX_VARS {
                    return Err(ParseError::new(
                        line_no,
                        format!("variable count must be in 1..={MAX_VARS}"),
                    ));
                }
                set = Some(MonomialSet::empty(n, order));
            }
            Some(set) => {
                let mut exps = Vec::with_capacity(set.arity());
                for tok in line.split_whitespace() {
                    let e: u32 = tok.parse().map_err(|_| {
                        ParseError::new(line_no, format!("invalid exponent `{tok}`"))
                    })?;
                    exps.push(e);
                }
                if exps.len() != set.arity() {
                    return Err(ParseError::new(
                        line_no,
                        format!("expected {} exponents, found {}", set.arity(), exps.len()),
                    ));
                }
                let m = Monomial::new(exps);
                if !set.contains(&m) {
                    set.insert(m);
                }
            }
        }
    }
    set.ok_or_else(|| ParseError::new(1, "missing `vars n` header"))
}

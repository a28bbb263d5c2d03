//! Unsharp negation, implication and conjunction.
//!
//! Every operator scans the carrier for the elements satisfying its defining
//! condition and returns the maximal ones:
//!
//! * `a⁰   = Max{x | L(a,x) = 0}`
//! * `a→b  = Max{x | L(a,x) ≤ b}`
//! * `a⊙b  = Max L(a,b)`
//!
//! The set forms quantify over every member of the argument sets. Results are
//! always non-empty antichains for non-empty arguments.

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::set::ElementSet;

fn scan<F: Fn(usize) -> bool>(p: &Poset, keep: F) -> ElementSet {
    (0..p.len()).filter(|&x| keep(x)).collect()
}

fn is_zero(p: &Poset, cone: ElementSet) -> bool {
    cone == ElementSet::singleton(p.bottom())
}

/// `a⁰`.
pub fn negation(p: &Poset, a: usize) -> ElementSet {
    p.max_elements(scan(p, |x| is_zero(p, p.lower_cone(a, x))))
}

/// `A⁰ = Max{x | L(x,y) = 0 for all y ∈ A}`.
pub fn negation_set(p: &Poset, a: ElementSet) -> Result<ElementSet> {
    if a.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(negation_set_unchecked(p, a))
}

pub(crate) fn negation_set_unchecked(p: &Poset, a: ElementSet) -> ElementSet {
    p.max_elements(scan(p, |x| {
        a.iter().all(|y| is_zero(p, p.lower_cone(x, y)))
    }))
}

/// `a→b`.
pub fn implication(p: &Poset, a: usize, b: usize) -> ElementSet {
    let below_b = p.down(b);
    p.max_elements(scan(p, |x| p.lower_cone(a, x).is_subset(below_b)))
}

/// `A→B = Max{y | L(x,y) ≤₁ B for all x ∈ A}`.
pub fn implication_set(p: &Poset, a: ElementSet, b: ElementSet) -> Result<ElementSet> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(implication_set_unchecked(p, a, b))
}

pub(crate) fn implication_set_unchecked(p: &Poset, a: ElementSet, b: ElementSet) -> ElementSet {
    let below_b = p.down_closure(b);
    p.max_elements(scan(p, |y| {
        a.iter().all(|x| p.lower_cone(x, y).is_subset(below_b))
    }))
}

/// `a⊙b`.
pub fn conjunction(p: &Poset, a: usize, b: usize) -> ElementSet {
    p.max_elements(p.lower_cone(a, b))
}

/// `A⊙B = Max Λ(A,B)`.
pub fn conjunction_set(p: &Poset, a: ElementSet, b: ElementSet) -> Result<ElementSet> {
    Ok(p.max_elements(p.lambda_cone(a, b)?))
}

/// The relative pseudocomplement `a*b`: the greatest `x` with `L(a,x) ≤ b`,
/// when there is one.
pub fn residuum(p: &Poset, a: usize, b: usize) -> Option<usize> {
    let below_b = p.down(b);
    let candidates = scan(p, |x| p.lower_cone(a, x).is_subset(below_b));
    candidates.iter().find(|&g| candidates.is_subset(p.down(g)))
}

/// The pseudocomplement `a* = a*0`.
pub fn pseudocomplement(p: &Poset, a: usize) -> Option<usize> {
    residuum(p, a, p.bottom())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operator {
    Negation,
    Implication,
    Conjunction,
}

impl Operator {
    pub fn symbol(self) -> &'static str {
        match self {
            Operator::Negation => "⁰",
            Operator::Implication => "→",
            Operator::Conjunction => "⊙",
        }
    }
}

impl std::str::FromStr for Operator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "neg" | "negation" => Ok(Operator::Negation),
            "imp" | "implication" => Ok(Operator::Implication),
            "conj" | "conjunction" => Ok(Operator::Conjunction),
            other => Err(Error::InvalidArgument(format!(
                "unknown operator `{other}`"
            ))),
        }
    }
}

/// A unary operator materialized as one set per element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnaryTable {
    entries: Vec<ElementSet>,
}

impl UnaryTable {
    pub fn from_entries(entries: Vec<ElementSet>) -> Self {
        UnaryTable { entries }
    }

    pub fn tabulate<F: Fn(usize) -> ElementSet>(n: usize, f: F) -> Self {
        UnaryTable {
            entries: (0..n).map(f).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    #[inline]
    pub fn get(&self, x: usize) -> ElementSet {
        self.entries[x]
    }

    pub fn set(&mut self, x: usize, value: ElementSet) {
        self.entries[x] = value;
    }

    pub fn entries(&self) -> &[ElementSet] {
        &self.entries
    }

    /// Checks that the table has one non-empty in-range entry per element.
    pub fn check_shape(&self, p: &Poset) -> Result<()> {
        if self.entries.len() != p.len() {
            return Err(Error::MalformedTable(format!(
                "{} entries for {} elements",
                self.entries.len(),
                p.len()
            )));
        }
        for (x, e) in self.entries.iter().enumerate() {
            if e.is_empty() || !e.fits(p.len()) {
                return Err(Error::MalformedTable(format!(
                    "entry for `{}` is empty or out of range",
                    p.name(x)
                )));
            }
        }
        Ok(())
    }
}

/// A binary operator materialized row-major over element pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryTable {
    size: usize,
    entries: Vec<ElementSet>,
}

impl BinaryTable {
    pub fn tabulate<F: Fn(usize, usize) -> ElementSet>(n: usize, f: F) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                entries.push(f(a, b));
            }
        }
        BinaryTable { size: n, entries }
    }

    /// Builds a table from rows; every row must have one entry per row.
    pub fn from_rows(rows: Vec<Vec<ElementSet>>) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::MalformedTable("table is not square".into()));
        }
        Ok(BinaryTable {
            size,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> ElementSet {
        self.entries[a * self.size + b]
    }

    pub fn set(&mut self, a: usize, b: usize, value: ElementSet) {
        self.entries[a * self.size + b] = value;
    }

    pub fn row(&self, a: usize) -> &[ElementSet] {
        &self.entries[a * self.size..(a + 1) * self.size]
    }

    pub fn check_shape(&self, p: &Poset) -> Result<()> {
        if self.size != p.len() {
            return Err(Error::MalformedTable(format!(
                "{0}×{0} table for {1} elements",
                self.size,
                p.len()
            )));
        }
        for a in 0..self.size {
            for b in 0..self.size {
                let e = self.get(a, b);
                if e.is_empty() || !e.fits(p.len()) {
                    return Err(Error::MalformedTable(format!(
                        "entry for (`{}`, `{}`) is empty or out of range",
                        p.name(a),
                        p.name(b)
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorTable {
    Unary(UnaryTable),
    Binary(Operator, BinaryTable),
}

/// Materializes the table of `op` over `p`.
pub fn operator_table(p: &Poset, op: Operator) -> OperatorTable {
    let n = p.len();
    match op {
        Operator::Negation => OperatorTable::Unary(UnaryTable::tabulate(n, |a| negation(p, a))),
        Operator::Implication => {
            OperatorTable::Binary(op, BinaryTable::tabulate(n, |a, b| implication(p, a, b)))
        }
        Operator::Conjunction => {
            OperatorTable::Binary(op, BinaryTable::tabulate(n, |a, b| conjunction(p, a, b)))
        }
    }
}

/// A poset together with its operator tables, built once.
///
/// Element-level lookups hit the tables; set-level operators fall back to the
/// tables whenever both arguments are singletons.
#[derive(Clone, Debug)]
pub struct Algebra {
    poset: Poset,
    neg: UnaryTable,
    imp: BinaryTable,
    conj: BinaryTable,
}

impl Algebra {
    pub fn new(poset: Poset) -> Self {
        let n = poset.len();
        let neg = UnaryTable::tabulate(n, |a| negation(&poset, a));
        let imp = BinaryTable::tabulate(n, |a, b| implication(&poset, a, b));
        let conj = BinaryTable::tabulate(n, |a, b| conjunction(&poset, a, b));
        Algebra {
            poset,
            neg,
            imp,
            conj,
        }
    }

    #[inline]
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn into_poset(self) -> Poset {
        self.poset
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    /// `{1}`.
    #[inline]
    pub fn one(&self) -> ElementSet {
        ElementSet::singleton(self.poset.top())
    }

    /// `{0}`.
    #[inline]
    pub fn zero(&self) -> ElementSet {
        ElementSet::singleton(self.poset.bottom())
    }

    #[inline]
    pub fn neg(&self, a: usize) -> ElementSet {
        self.neg.get(a)
    }

    #[inline]
    pub fn imp(&self, a: usize, b: usize) -> ElementSet {
        self.imp.get(a, b)
    }

    #[inline]
    pub fn conj(&self, a: usize, b: usize) -> ElementSet {
        self.conj.get(a, b)
    }

    /// `A⁰`; callers guarantee `A` is non-empty.
    pub fn neg_set(&self, a: ElementSet) -> ElementSet {
        match a.as_singleton() {
            Some(x) => self.neg(x),
            None => negation_set_unchecked(&self.poset, a),
        }
    }

    /// `A→B`; callers guarantee both sets are non-empty.
    pub fn imp_set(&self, a: ElementSet, b: ElementSet) -> ElementSet {
        match (a.as_singleton(), b.as_singleton()) {
            (Some(x), Some(y)) => self.imp(x, y),
            _ => implication_set_unchecked(&self.poset, a, b),
        }
    }

    /// `A⊙B`; callers guarantee both sets are non-empty.
    pub fn conj_set(&self, a: ElementSet, b: ElementSet) -> ElementSet {
        match (a.as_singleton(), b.as_singleton()) {
            (Some(x), Some(y)) => self.conj(x, y),
            _ => self.poset.max_elements(self.poset.lambda_unchecked(a, b)),
        }
    }

    pub fn negation_table(&self) -> &UnaryTable {
        &self.neg
    }

    pub fn implication_table(&self) -> &BinaryTable {
        &self.imp
    }

    pub fn conjunction_table(&self) -> &BinaryTable {
        &self.conj
    }

    pub fn table(&self, op: Operator) -> OperatorTable {
        match op {
            Operator::Negation => OperatorTable::Unary(self.neg.clone()),
            Operator::Implication => OperatorTable::Binary(op, self.imp.clone()),
            Operator::Conjunction => OperatorTable::Binary(op, self.conj.clone()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;

    fn row(p: &Poset, f: impl Fn(usize) -> ElementSet) -> Vec<String> {
        (0..p.len()).map(|x| p.format_set(f(x))).collect()
    }

    #[test]
    fn negation_on_p1() {
        let p = p1();
        assert_eq!(
            row(&p, |x| negation(&p, x)),
            ["1", "f", "ac", "d", "c", "0", "a", "0"]
        );
        assert_eq!(negation_set(&p, set(&p, "b")).unwrap(), set(&p, "ac"));
    }

    #[test]
    fn negation_of_bounds() {
        for p in [p1(), p2(), p3(), p4(), diamond(), chain(1), chain(3)] {
            assert_eq!(negation(&p, p.bottom()), ElementSet::singleton(p.top()));
            assert_eq!(negation(&p, p.top()), ElementSet::singleton(p.bottom()));
            assert_eq!(
                negation_set(&p, ElementSet::singleton(p.bottom())).unwrap(),
                ElementSet::singleton(p.top())
            );
        }
    }

    #[test]
    fn negation_on_p2() {
        let p = p2();
        assert_eq!(negation(&p, el(&p, "f")), set(&p, "ae"));
        assert_eq!(negation(&p, el(&p, "c")), set(&p, "abde"));
    }

    #[test]
    fn negation_set_matches_brute_force() {
        let p = p1();
        let ac = set(&p, "ac");
        // Independent scan: x is kept iff no non-zero element lies below x and a member.
        let kept: ElementSet = (0..p.len())
            .filter(|&x| {
                ac.iter()
                    .all(|y| (0..p.len()).all(|z| z == p.bottom() || !(p.leq(z, x) && p.leq(z, y))))
            })
            .collect();
        let expected = p.max_elements(kept);
        assert_eq!(negation_set(&p, ac).unwrap(), expected);
        assert_eq!(expected, set(&p, "b"));
        assert_eq!(negation_set(&p, ElementSet::EMPTY), Err(Error::EmptyInput));
    }

    #[test]
    fn implication_on_p3() {
        let p = p3();
        assert_eq!(implication(&p, el(&p, "a"), el(&p, "b")), set(&p, "bc"));
        assert_eq!(implication(&p, el(&p, "c"), el(&p, "0")), set(&p, "de"));
        assert_eq!(implication(&p, el(&p, "e"), el(&p, "d")), set(&p, "cd"));
        for x in 0..p.len() {
            assert_eq!(implication(&p, p.top(), x), ElementSet::singleton(x));
            assert_eq!(implication(&p, x, x), ElementSet::singleton(p.top()));
        }
    }

    #[test]
    fn implication_on_p4() {
        let p = p4();
        assert_eq!(implication(&p, el(&p, "c"), el(&p, "a")), set(&p, "e"));
        assert_eq!(implication(&p, el(&p, "e"), el(&p, "a")), set(&p, "c"));
        assert_eq!(implication(&p, el(&p, "d"), el(&p, "0")), set(&p, "0"));
    }

    #[test]
    fn implication_set_cases() {
        let p = p4();
        let d1 = set(&p, "de1");
        let one = set(&p, "1");
        assert_eq!(implication_set(&p, d1, one).unwrap(), one);
        assert_eq!(implication_set(&p, d1, d1).unwrap(), one);
        let ab = set(&p, "ab");
        assert_eq!(implication_set(&p, one, ab).unwrap(), ab);
        assert_eq!(implication_set(&p, one, set(&p, "0ab")).unwrap(), ab);
        assert_eq!(
            implication_set(&p, one, ElementSet::EMPTY),
            Err(Error::EmptyInput)
        );
    }

    #[test]
    fn conjunction_on_p3() {
        let p = p3();
        let [d, e] = [el(&p, "d"), el(&p, "e")];
        assert_eq!(conjunction(&p, d, e), set(&p, "ab"));
        assert_eq!(conjunction(&p, e, d), set(&p, "ab"));
        assert_eq!(conjunction(&p, d, d), set(&p, "d"));
        for x in 0..p.len() {
            assert_eq!(conjunction(&p, x, p.top()), ElementSet::singleton(x));
            assert_eq!(
                conjunction(&p, x, p.bottom()),
                ElementSet::singleton(p.bottom())
            );
        }
        assert_eq!(
            conjunction_set(&p, set(&p, "d"), set(&p, "e")).unwrap(),
            set(&p, "ab")
        );
        assert_eq!(
            conjunction_set(&p, ElementSet::EMPTY, set(&p, "e")),
            Err(Error::EmptyInput)
        );
    }

    #[test]
    fn residuum_detection() {
        let p = p3();
        assert_eq!(residuum(&p, el(&p, "a"), el(&p, "b")), None);
        let q = diamond();
        assert_eq!(pseudocomplement(&q, el(&q, "a")), Some(el(&q, "b")));
        for p in [p1(), p3(), q] {
            for b in 0..p.len() {
                assert_eq!(residuum(&p, p.bottom(), b), Some(p.top()));
            }
        }
    }

    #[test]
    fn algebra_agrees_with_free_functions() {
        let p = p3();
        let alg = Algebra::new(p.clone());
        let de = set(&p, "de");
        let bc = set(&p, "bc");
        assert_eq!(alg.imp_set(de, bc), implication_set(&p, de, bc).unwrap());
        assert_eq!(alg.conj_set(de, bc), conjunction_set(&p, de, bc).unwrap());
        assert_eq!(alg.neg_set(de), negation_set(&p, de).unwrap());
        assert_eq!(
            operator_table(&p, Operator::Implication),
            alg.table(Operator::Implication)
        );
    }

    #[test]
    fn malformed_tables() {
        let p = diamond();
        let t = UnaryTable::from_entries(vec![ElementSet::singleton(3); 3]);
        assert!(matches!(t.check_shape(&p), Err(Error::MalformedTable(_))));
        let t = UnaryTable::from_entries(vec![ElementSet::EMPTY; 4]);
        assert!(matches!(t.check_shape(&p), Err(Error::MalformedTable(_))));
        assert!(BinaryTable::from_rows(vec![vec![ElementSet::EMPTY; 2]]).is_err());
    }
}

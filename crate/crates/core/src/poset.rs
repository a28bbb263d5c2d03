//! Finite bounded posets and the set-level order calculus on them.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::set::{ElementSet, MAX_ELEMENTS};

/// A finite partial order with a least element `0` and a greatest element `1`.
///
/// Elements are indices `0..n` in input order; every element carries a unique
/// label. The order is stored as down-sets and up-sets, one bit vector per
/// element, so `x ≤ y` is `down(y).contains(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    down: Vec<ElementSet>,
    up: Vec<ElementSet>,
    bottom: usize,
    top: usize,
}

/// The three ways one non-empty set can sit below another.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CompareResult {
    /// `A ≤ B`: every member of `A` is below every member of `B`.
    pub leq_all: bool,
    /// `A ≤₁ B`: every member of `A` is below some member of `B`.
    pub leq1: bool,
    /// `A =₁ B`: `A ≤₁ B` and `B ≤₁ A`.
    pub eq1: bool,
}

impl Poset {
    /// Builds a poset from its Hasse covers `(lower, upper)`, taking the
    /// reflexive-transitive closure.
    pub fn from_covers(names: Vec<String>, covers: &[(usize, usize)]) -> Result<Poset> {
        let n = names.len();
        check_names(&names)?;
        let mut up: Vec<ElementSet> = (0..n).map(ElementSet::singleton).collect();
        for &(lo, hi) in covers {
            if lo >= n || hi >= n {
                return Err(Error::InvalidArgument(format!(
                    "cover ({lo}, {hi}) is out of range for {n} elements"
                )));
            }
            if lo == hi {
                return Err(Error::Cycle(names[lo].clone()));
            }
            up[lo].insert(hi);
        }
        // Warshall on the up-sets.
        for k in 0..n {
            let above_k = up[k];
            for set in up.iter_mut() {
                if set.contains(k) {
                    *set = set.union(above_k);
                }
            }
        }
        let down = transpose(&up);
        for x in 0..n {
            let both = up[x].intersection(down[x]);
            if both != ElementSet::singleton(x) {
                return Err(Error::Cycle(names[x].clone()));
            }
        }
        Self::with_bounds(names, down, up)
    }

    /// Same as [`Poset::from_covers`] with covers given by label.
    pub fn from_labeled_covers<S: AsRef<str>>(names: &[S], covers: &[(S, S)]) -> Result<Poset> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_owned()).collect();
        let index: HashMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let lookup = |s: &S| {
            index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| Error::UnknownLabel(s.as_ref().to_owned()))
        };
        let covers = covers
            .iter()
            .map(|(lo, hi)| Ok((lookup(lo)?, lookup(hi)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_covers(names, &covers)
    }

    /// Builds a poset from a full order predicate, checking the partial order
    /// axioms and boundedness.
    pub fn from_order<F>(names: Vec<String>, leq: F) -> Result<Poset>
    where
        F: Fn(usize, usize) -> bool,
    {
        let n = names.len();
        check_names(&names)?;
        let up: Vec<ElementSet> = (0..n)
            .map(|x| (0..n).filter(|&y| leq(x, y)).collect())
            .collect();
        for x in 0..n {
            if !up[x].contains(x) {
                return Err(Error::NotPartialOrder(format!("`{}` ≰ itself", names[x])));
            }
            for y in up[x].iter() {
                if y != x && up[y].contains(x) {
                    return Err(Error::NotPartialOrder(format!(
                        "`{}` and `{}` violate antisymmetry",
                        names[x], names[y]
                    )));
                }
                if !up[y].is_subset(up[x]) {
                    return Err(Error::NotPartialOrder(format!(
                        "transitivity fails above `{}` ≤ `{}`",
                        names[x], names[y]
                    )));
                }
            }
        }
        let down = transpose(&up);
        Self::with_bounds(names, down, up)
    }

    fn with_bounds(
        names: Vec<String>,
        down: Vec<ElementSet>,
        up: Vec<ElementSet>,
    ) -> Result<Poset> {
        let full = ElementSet::full(names.len());
        let bottom = (0..names.len())
            .find(|&x| up[x] == full)
            .ok_or_else(|| Error::NotBounded("no least element".into()))?;
        let top = (0..names.len())
            .find(|&x| down[x] == full)
            .ok_or_else(|| Error::NotBounded("no greatest element".into()))?;
        Ok(Poset {
            names,
            down,
            up,
            bottom,
            top,
        })
    }

    /// The same order with elements reordered: new element `i` is old
    /// element `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Poset> {
        let n = self.len();
        let mut seen = ElementSet::EMPTY;
        for &p in perm {
            if p >= n || seen.contains(p) {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
            seen.insert(p);
        }
        if perm.len() != n {
            return Err(Error::InvalidArgument("not a permutation".into()));
        }
        let names = perm.iter().map(|&p| self.names[p].clone()).collect();
        Poset::from_order(names, |i, j| self.leq(perm[i], perm[j]))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.names.len()
    }

    /// Always false: a bounded poset has at least one element.
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.names.iter().position(|s| s == label)
    }

    /// Like [`Poset::index_of`], with an error naming the missing label.
    pub fn element(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    #[inline]
    pub fn bottom(&self) -> usize {
        self.bottom
    }

    #[inline]
    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(x)
    }

    /// `{y | y ≤ x}`.
    #[inline]
    pub fn down(&self, x: usize) -> ElementSet {
        self.down[x]
    }

    /// `{y | x ≤ y}`.
    #[inline]
    pub fn up(&self, x: usize) -> ElementSet {
        self.up[x]
    }

    /// Union of the down-sets of the members of `set`.
    pub fn down_closure(&self, set: ElementSet) -> ElementSet {
        set.iter()
            .fold(ElementSet::EMPTY, |acc, x| acc.union(self.down[x]))
    }

    /// Hasse covers `(x, y)` with `x < y` and nothing strictly between, in
    /// element order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in self.up[x].iter() {
                if y != x && self.up[x].intersection(self.down[y]).len() == 2 {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Order matrix, `m[x][y] == (x ≤ y)`.
    pub fn order_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.len())
            .map(|x| (0..self.len()).map(|y| self.leq(x, y)).collect())
            .collect()
    }

    /// `L(a,b)`: everything below both `a` and `b`.
    #[inline]
    pub fn lower_cone(&self, a: usize, b: usize) -> ElementSet {
        self.down[a].intersection(self.down[b])
    }

    /// `Λ(A,B)`: the union of `L(x,y)` over `x ∈ A`, `y ∈ B`.
    pub fn lambda_cone(&self, a: ElementSet, b: ElementSet) -> Result<ElementSet> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(self.lambda_unchecked(a, b))
    }

    /// `Λ(A,B)` without the emptiness check; empty input yields `∅`.
    #[inline]
    pub fn lambda_unchecked(&self, a: ElementSet, b: ElementSet) -> ElementSet {
        // L distributes: Λ(A,B) = ↓A ∩ ↓B.
        self.down_closure(a).intersection(self.down_closure(b))
    }

    /// Maximal elements of `set`.
    pub fn max_elements(&self, set: ElementSet) -> ElementSet {
        set.iter()
            .filter(|&x| self.up[x].intersection(set) == ElementSet::singleton(x))
            .collect()
    }

    pub fn is_antichain(&self, set: ElementSet) -> bool {
        set.iter()
            .all(|x| self.up[x].intersection(set) == ElementSet::singleton(x))
    }

    /// `A ≤ B`.
    pub fn leq_all(&self, a: ElementSet, b: ElementSet) -> bool {
        let below_all = b
            .iter()
            .fold(self.carrier(), |acc, y| acc.intersection(self.down[y]));
        a.is_subset(below_all)
    }

    /// `A ≤₁ B`.
    pub fn leq1(&self, a: ElementSet, b: ElementSet) -> bool {
        a.is_subset(self.down_closure(b))
    }

    /// `A =₁ B`.
    pub fn eq1(&self, a: ElementSet, b: ElementSet) -> bool {
        self.leq1(a, b) && self.leq1(b, a)
    }

    pub fn compare_sets(&self, a: ElementSet, b: ElementSet) -> Result<CompareResult> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(CompareResult {
            leq_all: self.leq_all(a, b),
            leq1: self.leq1(a, b),
            eq1: self.eq1(a, b),
        })
    }

    /// Labels of the members concatenated in element order, so `{a, c}` is
    /// `ac` and a singleton is its bare label.
    pub fn format_set(&self, set: ElementSet) -> String {
        if set.is_empty() {
            return "∅".to_owned();
        }
        set.iter().map(|x| self.names[x].as_str()).collect()
    }

    /// Parses a set written as `+`-joined labels (`d+e`), a single label, or
    /// concatenated single-character labels (`de`).
    pub fn parse_set(&self, text: &str) -> Result<ElementSet> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::EmptyInput);
        }
        if text.contains('+') {
            return text
                .split('+')
                .map(|s| self.element(s.trim()))
                .collect::<Result<ElementSet>>();
        }
        if let Some(x) = self.index_of(text) {
            return Ok(ElementSet::singleton(x));
        }
        text.chars()
            .map(|c| self.element(c.encode_utf8(&mut [0; 4])))
            .collect::<Result<ElementSet>>()
    }
}

fn check_names(names: &[String]) -> Result<()> {
    if names.is_empty() {
        return Err(Error::EmptyPoset);
    }
    if names.len() > MAX_ELEMENTS {
        return Err(Error::TooLarge(names.len()));
    }
    let mut seen = std::collections::HashSet::new();
    for name in names {
        if !seen.insert(name.as_str()) {
            return Err(Error::DuplicateLabel(name.clone()));
        }
    }
    Ok(())
}

fn transpose(rel: &[ElementSet]) -> Vec<ElementSet> {
    let n = rel.len();
    let mut out = vec![ElementSet::EMPTY; n];
    for (x, row) in rel.iter().enumerate() {
        for y in row.iter() {
            out[y].insert(x);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p1() -> Poset {
        Poset::from_labeled_covers(
            &["0", "a", "b", "c", "d", "e", "f", "1"],
            &[
                ("0", "a"),
                ("0", "b"),
                ("0", "c"),
                ("a", "d"),
                ("a", "e"),
                ("b", "d"),
                ("b", "e"),
                ("b", "f"),
                ("c", "e"),
                ("c", "f"),
                ("d", "1"),
                ("e", "1"),
                ("f", "1"),
            ],
        )
        .unwrap()
    }

    fn set(p: &Poset, s: &str) -> ElementSet {
        p.parse_set(s).unwrap()
    }

    #[test]
    fn diamond_bounds() {
        let p = Poset::from_labeled_covers(
            &["0", "a", "b", "1"],
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
        )
        .unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.name(p.bottom()), "0");
        assert_eq!(p.name(p.top()), "1");
        assert!(!p.leq(1, 2) && !p.leq(2, 1));
    }

    #[test]
    fn cycle_is_rejected() {
        let err = Poset::from_labeled_covers(&["x", "y"], &[("x", "y"), ("y", "x")]).unwrap_err();
        assert!(matches!(err, Error::Cycle(_)));
        let err = Poset::from_labeled_covers(&["x"], &[("x", "x")]).unwrap_err();
        assert!(matches!(err, Error::Cycle(_)));
    }

    #[test]
    fn construction_errors() {
        let err = Poset::from_labeled_covers(&["a", "a"], &[]).unwrap_err();
        assert_eq!(err, Error::DuplicateLabel("a".into()));
        let err =
            Poset::from_labeled_covers(&["0", "a", "b"], &[("0", "a"), ("0", "b")]).unwrap_err();
        assert!(matches!(err, Error::NotBounded(_)));
        let err = Poset::from_labeled_covers(&["a", "b"], &[("a", "z")]).unwrap_err();
        assert_eq!(err, Error::UnknownLabel("z".into()));
        assert_eq!(
            Poset::from_covers(vec![], &[]).unwrap_err(),
            Error::EmptyPoset
        );
    }

    #[test]
    fn one_element_poset_is_bounded() {
        let p = Poset::from_covers(vec!["0".into()], &[]).unwrap();
        assert_eq!(p.bottom(), p.top());
        assert_eq!(p.lower_cone(0, 0), ElementSet::singleton(0));
    }

    #[test]
    fn lower_cones_on_p1() {
        let p = p1();
        let [a, b, d, e] = ["a", "b", "d", "e"].map(|s| p.index_of(s).unwrap());
        assert_eq!(p.lower_cone(a, b), set(&p, "0"));
        assert_eq!(p.lower_cone(d, e), set(&p, "0ab"));
        for x in 0..p.len() {
            assert_eq!(p.lower_cone(x, p.top()), p.down(x));
            assert!(p.lower_cone(x, a).contains(p.bottom()));
        }
    }

    #[test]
    fn lambda_reduces_to_lower_cone() {
        let p = p1();
        assert_eq!(
            p.lambda_cone(set(&p, "a"), set(&p, "b")).unwrap(),
            set(&p, "0")
        );
        assert_eq!(
            p.lambda_cone(set(&p, "ac"), set(&p, "1")).unwrap(),
            p.down(1).union(p.down(3))
        );
        assert_eq!(
            p.lambda_cone(ElementSet::EMPTY, set(&p, "a")),
            Err(Error::EmptyInput)
        );
    }

    #[test]
    fn max_elements_cases() {
        let p = p1();
        assert_eq!(p.max_elements(set(&p, "0ab")), set(&p, "ab"));
        assert_eq!(p.max_elements(p.carrier()), set(&p, "1"));
        assert_eq!(p.max_elements(ElementSet::EMPTY), ElementSet::EMPTY);
    }

    #[test]
    fn compare_with_bottom_and_self() {
        let p = p1();
        let a = set(&p, "a");
        let r = p.compare_sets(a, a).unwrap();
        assert!(r.leq_all && r.leq1 && r.eq1);
        assert!(
            p.compare_sets(set(&p, "0"), set(&p, "def"))
                .unwrap()
                .leq_all
        );
        assert_eq!(p.compare_sets(a, ElementSet::EMPTY), Err(Error::EmptyInput));
    }

    #[test]
    fn antichains() {
        let p = p1();
        assert!(p.is_antichain(set(&p, "ac")));
        assert!(!p.is_antichain(set(&p, "ad")));
        assert!(p.is_antichain(set(&p, "e")));
        assert!(p.is_antichain(ElementSet::EMPTY));
    }

    #[test]
    fn covers_round_trip() {
        let p = p1();
        let again = Poset::from_covers(p.names().to_vec(), &p.covers()).unwrap();
        assert_eq!(p, again);
        assert_eq!(p.covers().len(), 13);
    }

    #[test]
    fn parse_set_forms() {
        let p = p1();
        assert_eq!(set(&p, "d+e+1"), set(&p, "de1"));
        assert_eq!(p.format_set(set(&p, "ca")), "ac");
        assert!(matches!(p.parse_set("dz"), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn relabel_preserves_order() {
        let p = p1();
        let perm = [7, 3, 0, 5, 1, 6, 2, 4];
        let q = p.relabel(&perm).unwrap();
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(q.leq(i, j), p.leq(perm[i], perm[j]));
            }
        }
        assert_eq!(q.name(q.top()), "1");
    }
}

//! Deductive systems, induced relations and the substitution property.
//!
//! A deductive system is a family `D` of non-empty subsets with
//!
//! 1. `1 ∈ D`;
//! 2. `x→y ∈ D` and `(x→y)→(z→u) ∈ D` imply `z→u ∈ D`;
//! 3. `x→y, y→x ∈ D` imply `(z→x)→(z→y) ∈ D` and `(x→z)→(y→z) ∈ D`;
//!
//! for all elements `x, y, z, u`. Only sets that are values of these
//! expressions take part in the conditions, so searches run over the finite
//! [`relevant_universe`] instead of all of `2^P`.
//!
//! Membership is set equality; the singleton `{x}` stands for `x`.

use std::collections::HashSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::connectives::Algebra;
use crate::error::{Error, Result};
use crate::laws::{Counterexample, LawReport, Value};
use crate::poset::Poset;
use crate::set::ElementSet;

/// Default largest universe [`search_deductive_systems`] accepts.
pub const DEFAULT_UNIVERSE_CAP: usize = 20;

/// Largest universe [`all_partitions`] enumerates exhaustively.
pub const EXHAUSTIVE_PARTITION_LIMIT: usize = 8;

/// An ordered, duplicate-free family of non-empty sets.
///
/// Sets are kept in [`ElementSet`]'s canonical order: by size, then
/// lexicographically on member indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SetFamily {
    sets: Vec<ElementSet>,
}

impl SetFamily {
    pub fn new<I: IntoIterator<Item = ElementSet>>(sets: I) -> Result<Self> {
        let mut sets: Vec<ElementSet> = sets.into_iter().collect();
        if sets.iter().any(|s| s.is_empty()) {
            return Err(Error::EmptyInput);
        }
        sets.sort();
        sets.dedup();
        Ok(SetFamily { sets })
    }

    fn from_sorted(sets: Vec<ElementSet>) -> Self {
        SetFamily { sets }
    }

    /// Parses comma-separated sets such as `d,e,1` or `bc,d+e,1`.
    pub fn parse(p: &Poset, text: &str) -> Result<Self> {
        let sets = text
            .split(',')
            .map(|part| p.parse_set(part))
            .collect::<Result<Vec<_>>>()?;
        SetFamily::new(sets)
    }

    pub fn sets(&self) -> &[ElementSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn index_of(&self, set: ElementSet) -> Option<usize> {
        self.sets.binary_search(&set).ok()
    }

    pub fn contains(&self, set: ElementSet) -> bool {
        self.index_of(set).is_some()
    }

    /// Members that are singletons, as an element set.
    pub fn elements(&self) -> ElementSet {
        self.sets.iter().filter_map(|s| s.as_singleton()).collect()
    }

    pub fn is_subfamily(&self, other: &SetFamily) -> bool {
        self.sets.iter().all(|&s| other.contains(s))
    }

    /// `{d, e, 1}`.
    pub fn render(&self, p: &Poset) -> String {
        let parts: Vec<String> = self.sets.iter().map(|&s| p.format_set(s)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// A family satisfying all three deductive-system conditions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DeductiveSystem {
    members: SetFamily,
}

impl DeductiveSystem {
    /// Verifies `family` and wraps it on success.
    pub fn try_new(alg: &Algebra, family: SetFamily) -> std::result::Result<Self, DsVerification> {
        let v = verify_deductive_system(alg, &family);
        if v.holds {
            Ok(DeductiveSystem { members: family })
        } else {
            Err(v)
        }
    }

    pub fn members(&self) -> &SetFamily {
        &self.members
    }

    pub fn contains(&self, set: ElementSet) -> bool {
        self.members.contains(set)
    }
}

/// `{1}` together with every singleton and every `x→y`, closed `depth - 1`
/// more times under `A→B`.
pub fn relevant_universe(alg: &Algebra, depth: usize) -> Result<SetFamily> {
    if depth == 0 {
        return Err(Error::InvalidArgument(
            "universe depth must be at least 1".into(),
        ));
    }
    let n = alg.len();
    let mut level: HashSet<ElementSet> = (0..n).map(ElementSet::singleton).collect();
    for x in 0..n {
        for y in 0..n {
            level.insert(alg.imp(x, y));
        }
    }
    for _ in 1..depth {
        let current: Vec<ElementSet> = level.iter().copied().collect();
        for &a in &current {
            for &b in &current {
                level.insert(alg.imp_set(a, b));
            }
        }
    }
    SetFamily::new(level)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `(z→x)→(z→y)`
    Consequent,
    /// `(x→z)→(y→z)`
    Antecedent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DsViolation {
    /// `{1}` is not a member.
    MissingTop,
    /// `x→y` and `(x→y)→(z→u)` are members but `z→u` is not.
    Detachment {
        x: usize,
        y: usize,
        z: usize,
        u: usize,
        missing: ElementSet,
    },
    /// `x→y` and `y→x` are members but the compound on `side` is not.
    Compatibility {
        x: usize,
        y: usize,
        z: usize,
        side: Side,
        missing: ElementSet,
    },
}

impl DsViolation {
    pub fn elements(&self) -> Vec<usize> {
        match *self {
            DsViolation::MissingTop => Vec::new(),
            DsViolation::Detachment { x, y, z, u, .. } => vec![x, y, z, u],
            DsViolation::Compatibility { x, y, z, .. } => vec![x, y, z],
        }
    }

    pub fn condition(&self) -> &'static str {
        match self {
            DsViolation::MissingTop => "(i) 1 ∈ D",
            DsViolation::Detachment { .. } => "(ii) x→y, (x→y)→(z→u) ∈ D ⇒ z→u ∈ D",
            DsViolation::Compatibility {
                side: Side::Consequent,
                ..
            } => "(iii) x→y, y→x ∈ D ⇒ (z→x)→(z→y) ∈ D",
            DsViolation::Compatibility {
                side: Side::Antecedent,
                ..
            } => "(iii) x→y, y→x ∈ D ⇒ (x→z)→(y→z) ∈ D",
        }
    }

    pub fn render(&self, p: &Poset) -> String {
        match *self {
            DsViolation::MissingTop => format!("{}: 1 is missing", self.condition()),
            DsViolation::Detachment {
                x,
                y,
                z,
                u,
                missing,
            } => format!(
                "{}: x={} y={} z={} u={}, z→u = {} is missing",
                self.condition(),
                p.name(x),
                p.name(y),
                p.name(z),
                p.name(u),
                p.format_set(missing)
            ),
            DsViolation::Compatibility {
                x, y, z, missing, ..
            } => format!(
                "{}: x={} y={} z={}, {} is missing",
                self.condition(),
                p.name(x),
                p.name(y),
                p.name(z),
                p.format_set(missing)
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DsVerification {
    pub holds: bool,
    /// First violation of each condition, in the order (i), (ii), (iii).
    pub violations: Vec<DsViolation>,
}

/// Checks the three deductive-system conditions by direct evaluation over
/// all element tuples.
pub fn verify_deductive_system(alg: &Algebra, d: &SetFamily) -> DsVerification {
    let n = alg.len();
    let mut violations = Vec::new();
    if !d.contains(alg.one()) {
        violations.push(DsViolation::MissingTop);
    }

    'detach: for x in 0..n {
        for y in 0..n {
            let xy = alg.imp(x, y);
            if !d.contains(xy) {
                continue;
            }
            for z in 0..n {
                for u in 0..n {
                    let zu = alg.imp(z, u);
                    if d.contains(alg.imp_set(xy, zu)) && !d.contains(zu) {
                        violations.push(DsViolation::Detachment {
                            x,
                            y,
                            z,
                            u,
                            missing: zu,
                        });
                        break 'detach;
                    }
                }
            }
        }
    }

    let mut found = [false; 2];
    for x in 0..n {
        for y in 0..n {
            if !(d.contains(alg.imp(x, y)) && d.contains(alg.imp(y, x))) {
                continue;
            }
            for z in 0..n {
                let consequent = alg.imp_set(alg.imp(z, x), alg.imp(z, y));
                let antecedent = alg.imp_set(alg.imp(x, z), alg.imp(y, z));
                for (k, side, set) in [
                    (0, Side::Consequent, consequent),
                    (1, Side::Antecedent, antecedent),
                ] {
                    if !found[k] && !d.contains(set) {
                        found[k] = true;
                        violations.push(DsViolation::Compatibility {
                            x,
                            y,
                            z,
                            side,
                            missing: set,
                        });
                    }
                }
            }
        }
    }

    DsVerification {
        holds: violations.is_empty(),
        violations,
    }
}

/// Horn rules over universe indices: when every premise is a member, the
/// conclusion must be; `None` marks a conclusion outside the universe.
struct Rules {
    rules: Vec<(u64, Option<usize>)>,
}

impl Rules {
    fn compile(alg: &Algebra, universe: &SetFamily) -> Rules {
        let n = alg.len();
        let idx = |s: ElementSet| universe.index_of(s);
        let mut set = HashSet::new();
        for x in 0..n {
            for y in 0..n {
                let xy = alg.imp(x, y);
                let Some(i_xy) = idx(xy) else { continue };
                for z in 0..n {
                    for u in 0..n {
                        let zu = alg.imp(z, u);
                        if let Some(i_comp) = idx(alg.imp_set(xy, zu)) {
                            set.insert((1u64 << i_xy | 1u64 << i_comp, idx(zu)));
                        }
                    }
                }
                let Some(i_yx) = idx(alg.imp(y, x)) else {
                    continue;
                };
                let premise = 1u64 << i_xy | 1u64 << i_yx;
                for z in 0..n {
                    set.insert((premise, idx(alg.imp_set(alg.imp(z, x), alg.imp(z, y)))));
                    set.insert((premise, idx(alg.imp_set(alg.imp(x, z), alg.imp(y, z)))));
                }
            }
        }
        let mut rules: Vec<_> = set.into_iter().collect();
        rules.sort();
        Rules { rules }
    }

    /// Smallest rule-closed superset of `mask`, or `None` if closing requires
    /// a set outside the universe.
    fn close(&self, mut mask: u64) -> Option<u64> {
        loop {
            let mut changed = false;
            for &(premise, conclusion) in &self.rules {
                if premise & !mask != 0 {
                    continue;
                }
                match conclusion {
                    None => return None,
                    Some(c) if mask >> c & 1 == 0 => {
                        mask |= 1 << c;
                        changed = true;
                    }
                    Some(_) => {}
                }
            }
            if !changed {
                return Some(mask);
            }
        }
    }
}

/// Every deductive system contained in `universe`, up to `limit` of them.
///
/// Backtracks over include/exclude decisions in universe order; every
/// inclusion is closed under the rules and branches whose closure hits an
/// excluded set are cut.
pub fn search_deductive_systems(
    alg: &Algebra,
    universe: &SetFamily,
    limit: usize,
    cap: usize,
) -> Result<Vec<DeductiveSystem>> {
    let cap = cap.min(64);
    if universe.len() > cap {
        return Err(Error::UniverseTooLarge {
            size: universe.len(),
            cap,
        });
    }
    let top = universe.index_of(alg.one()).ok_or_else(|| {
        Error::UniverseIncomplete(vec![alg.poset().name(alg.poset().top()).to_owned()])
    })?;
    let rules = Rules::compile(alg, universe);
    let mut found = Vec::new();
    if let Some(start) = rules.close(1 << top) {
        search(&rules, universe.len(), 0, start, 0, limit, &mut found);
    }
    Ok(found
        .into_iter()
        .map(|mask| DeductiveSystem {
            members: SetFamily::from_sorted(
                (0..universe.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| universe.sets()[i])
                    .collect(),
            ),
        })
        .collect())
}

fn search(
    rules: &Rules,
    size: usize,
    i: usize,
    included: u64,
    excluded: u64,
    limit: usize,
    found: &mut Vec<u64>,
) {
    if found.len() >= limit {
        return;
    }
    if i == size {
        found.push(included);
        return;
    }
    if included >> i & 1 == 1 {
        search(rules, size, i + 1, included, excluded, limit, found);
        return;
    }
    search(
        rules,
        size,
        i + 1,
        included,
        excluded | 1 << i,
        limit,
        found,
    );
    if let Some(closed) = rules.close(included | 1 << i) {
        if closed & excluded == 0 {
            search(rules, size, i + 1, closed, excluded, limit, found);
        }
    }
}

/// `Θ(E)` over a universe, with its restriction to the carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedRelation {
    universe: SetFamily,
    pairs: Vec<(usize, usize)>,
    restriction: Vec<ElementSet>,
}

impl InducedRelation {
    pub fn universe(&self) -> &SetFamily {
        &self.universe
    }

    /// Related pairs as universe indices.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// `(x, y) ∈ Θ(E) ∩ P²`.
    pub fn related(&self, x: usize, y: usize) -> bool {
        self.restriction[x].contains(y)
    }

    /// `{y | (x, y) ∈ Θ(E) ∩ P²}`.
    pub fn row(&self, x: usize) -> ElementSet {
        self.restriction[x]
    }

    pub fn restriction_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.restriction.len())
            .flat_map(|x| self.restriction[x].iter().map(move |y| (x, y)))
            .collect()
    }

    /// Classes of the restriction when it is an equivalence, in order of
    /// their least element.
    pub fn classes(&self) -> Option<Vec<ElementSet>> {
        let n = self.restriction.len();
        let mut classes: Vec<ElementSet> = Vec::new();
        for x in 0..n {
            let row = self.restriction[x];
            if !row.contains(x) || row.iter().any(|y| self.restriction[y] != row) {
                return None;
            }
            if !classes.contains(&row) {
                classes.push(row);
            }
        }
        Some(classes)
    }
}

/// `Θ(E)`: `(A, B)` related iff `A→B ∈ E` and `B→A ∈ E`.
pub fn induced_relation(alg: &Algebra, e: &SetFamily, universe: &SetFamily) -> InducedRelation {
    let sets = universe.sets();
    let mut pairs = Vec::new();
    for (i, &a) in sets.iter().enumerate() {
        for (j, &b) in sets.iter().enumerate() {
            if e.contains(alg.imp_set(a, b)) && e.contains(alg.imp_set(b, a)) {
                pairs.push((i, j));
            }
        }
    }
    let n = alg.len();
    let restriction = (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| e.contains(alg.imp(x, y)) && e.contains(alg.imp(y, x)))
                .collect()
        })
        .collect();
    InducedRelation {
        universe: universe.clone(),
        pairs,
        restriction,
    }
}

/// `{(x, y) | x→y ∈ D}`.
pub fn implication_membership(alg: &Algebra, d: &SetFamily) -> Vec<(usize, usize)> {
    let n = alg.len();
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| d.contains(alg.imp(x, y)))
        .collect()
}

fn elements_cx(elements: Vec<usize>, lhs: Value, rhs: Value) -> Counterexample {
    Counterexample {
        sets: Vec::new(),
        elements,
        lhs,
        rhs,
    }
}

/// Checks that `Θ(D) ∩ P²` is an equivalence whose class of `1` is `D ∩ P`,
/// and that `Θ(D)` is compatible with `z→-` and `-→z`.
pub fn check_theta_theorem(alg: &Algebra, d: &DeductiveSystem) -> Vec<LawReport> {
    let p = alg.poset();
    let n = alg.len();
    let e = d.members();
    let theta = induced_relation(alg, e, &SetFamily::default());
    let mut equivalence = LawReport::new(
        "theta-equivalence",
        "Θ(D) ∩ P² is an equivalence relation",
        true,
    );
    for x in 0..n {
        equivalence.record(
            (!theta.related(x, x))
                .then(|| elements_cx(vec![x, x], Value::Bool(false), Value::Bool(true))),
        );
        for y in 0..n {
            equivalence.record((theta.related(x, y) != theta.related(y, x)).then(|| {
                elements_cx(
                    vec![x, y],
                    Value::Bool(theta.related(x, y)),
                    Value::Bool(theta.related(y, x)),
                )
            }));
            for z in 0..n {
                let broken = theta.related(x, y) && theta.related(y, z) && !theta.related(x, z);
                equivalence
                    .record(broken.then(|| {
                        elements_cx(vec![x, y, z], Value::Bool(false), Value::Bool(true))
                    }));
            }
        }
    }

    let mut kernel = LawReport::new("theta-kernel", "[1](Θ(D) ∩ P²) = D ∩ P", true);
    let class_of_top = theta.row(p.top());
    let members = e.elements();
    kernel.record(
        (class_of_top != members)
            .then(|| elements_cx(vec![], Value::Set(class_of_top), Value::Set(members))),
    );

    let mut substitution = LawReport::new(
        "theta-substitution",
        "(x,y) ∈ Θ(D) implies (z→x, z→y), (x→z, y→z) ∈ Θ(D)",
        true,
    );
    let related_sets = |a: ElementSet, b: ElementSet| {
        e.contains(alg.imp_set(a, b)) && e.contains(alg.imp_set(b, a))
    };
    for x in 0..n {
        for y in 0..n {
            if !theta.related(x, y) {
                continue;
            }
            for z in 0..n {
                for (a, b) in [
                    (alg.imp(z, x), alg.imp(z, y)),
                    (alg.imp(x, z), alg.imp(y, z)),
                ] {
                    substitution.record(
                        (!related_sets(a, b))
                            .then(|| elements_cx(vec![x, y, z], Value::Set(a), Value::Set(b))),
                    );
                }
            }
        }
    }
    vec![equivalence, kernel, substitution]
}

/// An equivalence on a finite family of sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    universe: SetFamily,
    block_of: Vec<usize>,
}

impl Partition {
    /// From a block label per universe set; labels are renumbered in order of
    /// first appearance.
    pub fn from_labels(universe: SetFamily, labels: &[usize]) -> Result<Self> {
        if labels.len() != universe.len() {
            return Err(Error::InvalidArgument(format!(
                "{} labels for a universe of {} sets",
                labels.len(),
                universe.len()
            )));
        }
        let mut seen: Vec<usize> = Vec::new();
        let block_of = labels
            .iter()
            .map(|l| match seen.iter().position(|s| s == l) {
                Some(i) => i,
                None => {
                    seen.push(*l);
                    seen.len() - 1
                }
            })
            .collect();
        Ok(Partition { universe, block_of })
    }

    /// From explicit blocks, which must be disjoint and cover the universe.
    pub fn from_blocks(universe: SetFamily, blocks: &[Vec<ElementSet>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; universe.len()];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidArgument("empty block".into()));
            }
            for &s in block {
                let i = universe.index_of(s).ok_or_else(|| {
                    Error::InvalidArgument(format!("set {s:?} is not in the universe"))
                })?;
                if labels[i] != usize::MAX {
                    return Err(Error::InvalidArgument(format!(
                        "set {s:?} is in two blocks"
                    )));
                }
                labels[i] = b;
            }
        }
        if labels.contains(&usize::MAX) {
            return Err(Error::InvalidArgument(
                "blocks do not cover the universe".into(),
            ));
        }
        Partition::from_labels(universe, &labels)
    }

    /// Every set in its own block.
    pub fn discrete(universe: SetFamily) -> Self {
        let labels: Vec<usize> = (0..universe.len()).collect();
        Partition {
            universe,
            block_of: labels,
        }
    }

    /// A single block.
    pub fn indiscrete(universe: SetFamily) -> Self {
        let block_of = vec![0; universe.len()];
        Partition { universe, block_of }
    }

    pub fn universe(&self) -> &SetFamily {
        &self.universe
    }

    pub fn block_of(&self, set: ElementSet) -> Option<usize> {
        self.universe.index_of(set).map(|i| self.block_of[i])
    }

    /// `A Φ B`; `None` if either set is outside the universe.
    pub fn related(&self, a: ElementSet, b: ElementSet) -> Option<bool> {
        Some(self.block_of(a)? == self.block_of(b)?)
    }

    pub fn blocks(&self) -> Vec<Vec<ElementSet>> {
        let count = self.block_of.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); count];
        for (i, &b) in self.block_of.iter().enumerate() {
            blocks[b].push(self.universe.sets()[i]);
        }
        blocks
    }

    /// The block containing `set`.
    pub fn class(&self, set: ElementSet) -> Option<SetFamily> {
        let b = self.block_of(set)?;
        Some(SetFamily::from_sorted(
            self.universe
                .sets()
                .iter()
                .zip(&self.block_of)
                .filter(|(_, &l)| l == b)
                .map(|(&s, _)| s)
                .collect(),
        ))
    }

    /// `[1]Φ`.
    pub fn kernel(&self, alg: &Algebra) -> Option<SetFamily> {
        self.class(alg.one())
    }

    /// `Φ ∩ P²` as one row per element.
    pub fn restriction(&self, n: usize) -> Vec<ElementSet> {
        (0..n)
            .map(|x| {
                (0..n)
                    .filter(|&y| {
                        self.related(ElementSet::singleton(x), ElementSet::singleton(y))
                            == Some(true)
                    })
                    .collect()
            })
            .collect()
    }

    pub fn render(&self, p: &Poset) -> String {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                let parts: Vec<String> = b.iter().map(|&s| p.format_set(s)).collect();
                format!("{{{}}}", parts.join(", "))
            })
            .collect();
        blocks.join(" | ")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.blocks())
    }
}

/// Every partition of `universe` via restricted growth strings.
pub fn all_partitions(universe: &SetFamily) -> Result<Vec<Partition>> {
    let m = universe.len();
    if m > EXHAUSTIVE_PARTITION_LIMIT {
        return Err(Error::BoundExceeded {
            what: "partition universe",
            n: m,
            max: EXHAUSTIVE_PARTITION_LIMIT,
        });
    }
    let mut out = Vec::new();
    let mut labels = vec![0usize; m];
    fn grow(
        i: usize,
        max: usize,
        labels: &mut [usize],
        universe: &SetFamily,
        out: &mut Vec<Partition>,
    ) {
        if i == labels.len() {
            out.push(Partition {
                universe: universe.clone(),
                block_of: labels.to_vec(),
            });
            return;
        }
        for l in 0..=max + 1 {
            labels[i] = l;
            grow(i + 1, max.max(l), labels, universe, out);
        }
    }
    if m == 0 {
        out.push(Partition::indiscrete(universe.clone()));
    } else {
        grow(1, 0, &mut labels, universe, &mut out);
    }
    Ok(out)
}

/// `count` random partitions of `universe`, reproducible from `seed`.
pub fn random_partitions(universe: &SetFamily, count: usize, seed: u64) -> Vec<Partition> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = universe.len();
    (0..count)
        .map(|_| {
            let blocks = rng.gen_range(1..=m.max(1));
            let labels: Vec<usize> = (0..m).map(|_| rng.gen_range(0..blocks)).collect();
            Partition::from_labels(universe.clone(), &labels).expect("label count matches")
        })
        .collect()
}

/// Every set mentioned by the substitution clauses, for all element tuples.
pub fn substitution_universe(alg: &Algebra) -> SetFamily {
    let n = alg.len();
    let one = alg.one();
    let mut sets: HashSet<ElementSet> = (0..n).map(ElementSet::singleton).collect();
    let imps: HashSet<ElementSet> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .map(|(x, y)| alg.imp(x, y))
        .collect();
    for x in 0..n {
        sets.insert(alg.conj_set(ElementSet::singleton(x), one));
        for y in 0..n {
            sets.insert(alg.conj_set(ElementSet::singleton(x), alg.imp(x, y)));
        }
    }
    for &a in &imps {
        sets.insert(a);
        sets.insert(alg.imp_set(one, a));
        for &b in &imps {
            sets.insert(alg.imp_set(a, b));
        }
    }
    SetFamily::new(sets).expect("operator values are non-empty")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstitutionViolation {
    /// 0 for the `⊙` clause, 1–4 for the four `→` clauses.
    pub clause: usize,
    pub elements: Vec<usize>,
    pub lhs: ElementSet,
    pub rhs: ElementSet,
}

impl SubstitutionViolation {
    pub fn statement(&self) -> &'static str {
        SUBSTITUTION_CLAUSES[self.clause]
    }
}

pub const SUBSTITUTION_CLAUSES: [&str; 5] = [
    "1 Φ x→y ⇒ x⊙1 Φ x⊙(x→y)",
    "x Φ y ⇒ x→x Φ x→y",
    "x Φ y ⇒ (z→x)→(z→x) Φ (z→x)→(z→y)",
    "x Φ y ⇒ (x→z)→(x→z) Φ (x→z)→(y→z)",
    "1 Φ x→y ⇒ 1→(z→u) Φ (x→y)→(z→u)",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstitutionCheck {
    pub holds: bool,
    /// First violation of each clause.
    pub violations: Vec<SubstitutionViolation>,
}

/// Checks the substitution property of `phi` with respect to `⊙` and `→`.
pub fn check_substitution(alg: &Algebra, phi: &Partition) -> Result<SubstitutionCheck> {
    let required = substitution_universe(alg);
    let missing: Vec<String> = required
        .sets()
        .iter()
        .filter(|&&s| !phi.universe().contains(s))
        .map(|&s| alg.poset().format_set(s))
        .collect();
    if !missing.is_empty() {
        return Err(Error::UniverseIncomplete(missing));
    }
    let n = alg.len();
    let one = alg.one();
    let single = ElementSet::singleton;
    let rel = |a: ElementSet, b: ElementSet| phi.related(a, b).expect("universe is complete");
    let mut first: [Option<SubstitutionViolation>; 5] = Default::default();
    let mut note = |clause: usize, elements: Vec<usize>, lhs: ElementSet, rhs: ElementSet| {
        if first[clause].is_none() && !rel(lhs, rhs) {
            first[clause] = Some(SubstitutionViolation {
                clause,
                elements,
                lhs,
                rhs,
            });
        }
    };
    for x in 0..n {
        for y in 0..n {
            let xy = alg.imp(x, y);
            if rel(one, xy) {
                note(
                    0,
                    vec![x, y],
                    alg.conj_set(single(x), one),
                    alg.conj_set(single(x), xy),
                );
                for z in 0..n {
                    for u in 0..n {
                        let zu = alg.imp(z, u);
                        note(
                            4,
                            vec![x, y, z, u],
                            alg.imp_set(one, zu),
                            alg.imp_set(xy, zu),
                        );
                    }
                }
            }
            if rel(single(x), single(y)) {
                note(1, vec![x, y], alg.imp(x, x), xy);
                for z in 0..n {
                    let (zx, zy) = (alg.imp(z, x), alg.imp(z, y));
                    note(2, vec![x, y, z], alg.imp_set(zx, zx), alg.imp_set(zx, zy));
                    let (xz, yz) = (alg.imp(x, z), alg.imp(y, z));
                    note(3, vec![x, y, z], alg.imp_set(xz, xz), alg.imp_set(xz, yz));
                }
            }
        }
    }
    let violations: Vec<_> = first.into_iter().flatten().collect();
    Ok(SubstitutionCheck {
        holds: violations.is_empty(),
        violations,
    })
}

/// Partitions of `universe` with the substitution property: all of them when
/// the universe is small enough, otherwise a seeded random sample.
pub fn substitution_partitions(
    alg: &Algebra,
    universe: &SetFamily,
    samples: usize,
    seed: u64,
) -> Result<Vec<Partition>> {
    let candidates = if universe.len() <= EXHAUSTIVE_PARTITION_LIMIT {
        all_partitions(universe)?
    } else {
        let mut c = random_partitions(universe, samples, seed);
        c.push(Partition::indiscrete(universe.clone()));
        c.push(Partition::discrete(universe.clone()));
        c
    };
    let mut out = Vec::new();
    for phi in candidates {
        if check_substitution(alg, &phi)?.holds {
            out.push(phi);
        }
    }
    Ok(out)
}

/// For partitions with the substitution property: related pairs read off the kernel, the
/// kernel being a deductive system, and kernels determining the restriction
/// to the carrier.
pub fn check_phi_theorems(alg: &Algebra, phis: &[Partition]) -> Result<Vec<LawReport>> {
    for (i, phi) in phis.iter().enumerate() {
        if !check_substitution(alg, phi)?.holds {
            return Err(Error::InvalidArgument(format!(
                "partition #{i} lacks the substitution property"
            )));
        }
    }
    let n = alg.len();
    let mut pairs = LawReport::new("phi-kernel-pairs", "(a,b) ∈ Φ iff a→b, b→a ∈ [1]Φ", true);
    let mut kernel_ds = LawReport::new("phi-kernel-ds", "[1]Φ is a deductive system", true);
    let mut regular = LawReport::new(
        "phi-weak-regularity",
        "[1]Φ = [1]Ψ implies Φ ∩ P² = Ψ ∩ P²",
        true,
    );
    let kernels: Vec<SetFamily> = phis
        .iter()
        .map(|phi| phi.kernel(alg).expect("substitution universe contains 1"))
        .collect();
    let restrictions: Vec<Vec<ElementSet>> = phis.iter().map(|phi| phi.restriction(n)).collect();

    for (phi, kernel) in phis.iter().zip(&kernels) {
        for a in 0..n {
            for b in 0..n {
                let related = phi
                    .related(ElementSet::singleton(a), ElementSet::singleton(b))
                    .expect("singletons are in the universe");
                let in_kernel = kernel.contains(alg.imp(a, b)) && kernel.contains(alg.imp(b, a));
                pairs.record((related != in_kernel).then(|| {
                    elements_cx(vec![a, b], Value::Bool(related), Value::Bool(in_kernel))
                }));
            }
        }
        let v = verify_deductive_system(alg, kernel);
        kernel_ds.record(
            v.violations
                .first()
                .map(|viol| elements_cx(viol.elements(), Value::Bool(false), Value::Bool(true))),
        );
    }

    for i in 0..phis.len() {
        for j in i + 1..phis.len() {
            if kernels[i] != kernels[j] {
                continue;
            }
            let differ = (0..n).find(|&x| restrictions[i][x] != restrictions[j][x]);
            regular.record(differ.map(|x| {
                elements_cx(
                    vec![x],
                    Value::Set(restrictions[i][x]),
                    Value::Set(restrictions[j][x]),
                )
            }));
        }
    }
    Ok(vec![pairs, kernel_ds, regular])
}

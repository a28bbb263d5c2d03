//! Model checking of the algebraic laws of `⁰`, `→` and `⊙`.
//!
//! Each [`LawId`] is a universally quantified statement over elements and
//! non-empty subsets of one poset. [`run_law_suite`] evaluates it on every
//! instance (subsets are sampled when the power set exceeds the budget in
//! [`SuiteConfig`]) and returns one [`LawReport`] per law.
//!
//! The characterizations of `⁰` by (P1)–(P3) and of `→` by (R1)–(R3) are
//! also exposed for arbitrary candidate tables through
//! [`check_negation_characterization`] and
//! [`check_implication_characterization`].

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::connectives::{
    implication_set_unchecked, negation_set_unchecked, Algebra, BinaryTable, UnaryTable,
};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::set::ElementSet;

/// Counterexamples kept per report; violations beyond this are only counted.
pub const MAX_COUNTEREXAMPLES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LawId {
    NegAntichain,
    NegBounds,
    NegDisjoint,
    NegAntitone,
    NegRigid,
    NegRigidPoint,
    NegDouble,
    NegCone,
    NegP1,
    NegP2,
    NegP3,
    ImpAntichain,
    ImpUpper,
    ImpDouble,
    ImpMonotone,
    ImpCone,
    ImpConeEq1,
    ImpTop,
    ImpUnit,
    ImpAdjointSet,
    ImpConj,
    ImpR1,
    ImpR2,
    ImpR3,
    Adjoint,
    ModusPonens,
    ImpZeroNeg,
    TTerm,
    ConjUnit,
    ConjComm,
    SingletonReduction,
    /// `a ≤ b ⇒ b⁰ ≤ a⁰` with the strong set order. Not a theorem.
    NegAntitoneLeq,
}

impl LawId {
    pub const ALL: [LawId; 32] = [
        LawId::NegAntichain,
        LawId::NegBounds,
        LawId::NegDisjoint,
        LawId::NegAntitone,
        LawId::NegRigid,
        LawId::NegRigidPoint,
        LawId::NegDouble,
        LawId::NegCone,
        LawId::NegP1,
        LawId::NegP2,
        LawId::NegP3,
        LawId::ImpAntichain,
        LawId::ImpUpper,
        LawId::ImpDouble,
        LawId::ImpMonotone,
        LawId::ImpCone,
        LawId::ImpConeEq1,
        LawId::ImpTop,
        LawId::ImpUnit,
        LawId::ImpAdjointSet,
        LawId::ImpConj,
        LawId::ImpR1,
        LawId::ImpR2,
        LawId::ImpR3,
        LawId::Adjoint,
        LawId::ModusPonens,
        LawId::ImpZeroNeg,
        LawId::TTerm,
        LawId::ConjUnit,
        LawId::ConjComm,
        LawId::SingletonReduction,
        LawId::NegAntitoneLeq,
    ];

    pub fn id(self) -> &'static str {
        match self {
            LawId::NegAntichain => "neg-antichain",
            LawId::NegBounds => "neg-bounds",
            LawId::NegDisjoint => "neg-disjoint",
            LawId::NegAntitone => "neg-antitone",
            LawId::NegRigid => "neg-rigid",
            LawId::NegRigidPoint => "neg-rigid-point",
            LawId::NegDouble => "neg-double",
            LawId::NegCone => "neg-cone",
            LawId::NegP1 => "neg-p1",
            LawId::NegP2 => "neg-p2",
            LawId::NegP3 => "neg-p3",
            LawId::ImpAntichain => "imp-antichain",
            LawId::ImpUpper => "imp-upper",
            LawId::ImpDouble => "imp-double",
            LawId::ImpMonotone => "imp-monotone",
            LawId::ImpCone => "imp-cone",
            LawId::ImpConeEq1 => "imp-cone-eq1",
            LawId::ImpTop => "imp-top",
            LawId::ImpUnit => "imp-unit",
            LawId::ImpAdjointSet => "imp-adjoint-set",
            LawId::ImpConj => "imp-conj",
            LawId::ImpR1 => "imp-r1",
            LawId::ImpR2 => "imp-r2",
            LawId::ImpR3 => "imp-r3",
            LawId::Adjoint => "adjoint",
            LawId::ModusPonens => "modus-ponens",
            LawId::ImpZeroNeg => "imp-zero-neg",
            LawId::TTerm => "t-term",
            LawId::ConjUnit => "conj-unit",
            LawId::ConjComm => "conj-comm",
            LawId::SingletonReduction => "singleton-reduction",
            LawId::NegAntitoneLeq => "neg-antitone-leq",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            LawId::NegAntichain => "A⁰ is an antichain",
            LawId::NegBounds => "0⁰ = 1 and 1⁰ = 0",
            LawId::NegDisjoint => "L(x,y) = 0 for x ∈ A, y ∈ A⁰",
            LawId::NegAntitone => "A ≤₁ B implies B⁰ ≤₁ A⁰",
            LawId::NegRigid => "A⁰ =₁ B⁰ implies A⁰ = B⁰",
            LawId::NegRigidPoint => "A⁰ =₁ b implies A⁰ = b",
            LawId::NegDouble => "A ≤₁ A⁰⁰ and A⁰⁰⁰ = A⁰",
            LawId::NegCone => "Λ(a, L(a,b)⁰) =₁ Λ(a, b⁰)",
            LawId::NegP1 => "(P1) x⁰ is an antichain",
            LawId::NegP2 => "(P2) L(x,y) = 0 for y ∈ x⁰",
            LawId::NegP3 => "(P3) Λ(x, L(x,y)⁰) =₁ Λ(x, y⁰)",
            LawId::ImpAntichain => "a→b is an antichain",
            LawId::ImpUpper => "b ≤₁ a→b",
            LawId::ImpDouble => "a ≤₁ (a→b)→b",
            LawId::ImpMonotone => "a ≤ b implies c→a ≤₁ c→b and b→c ≤₁ a→c",
            LawId::ImpCone => "Λ(a, a→b) = L(a,b)",
            LawId::ImpConeEq1 => "Λ(a→b, b) =₁ b",
            LawId::ImpTop => "1→A = Max A, = A for antichains",
            LawId::ImpUnit => "A→B = 1 iff A ≤₁ B",
            LawId::ImpAdjointSet => "A⊙b ≤ c iff A ≤₁ b→c",
            LawId::ImpConj => "a⊙(a→b) = a⊙b",
            LawId::ImpR1 => "(R1) x→y is an antichain",
            LawId::ImpR2 => "(R2) L(x,z) ≤ y implies z ≤₁ x→y",
            LawId::ImpR3 => "(R3) Λ(x, x→y) = L(x,y)",
            LawId::Adjoint => "x⊙y ≤ z iff x ≤₁ y→z",
            LawId::ModusPonens => "(x→y)⊙x ≤₁ y",
            LawId::ImpZeroNeg => "a→0 = a⁰",
            LawId::TTerm => "(a→b)⊙(b→a) = 1 iff a = b",
            LawId::ConjUnit => "x⊙1 = 1⊙x = x",
            LawId::ConjComm => "x⊙y = y⊙x",
            LawId::SingletonReduction => "set operators on singletons equal element operators",
            LawId::NegAntitoneLeq => "a < b implies b⁰ ≤ a⁰ (strong order, not a theorem)",
        }
    }

    /// False for probes that are known to fail on some posets.
    pub fn is_theorem(self) -> bool {
        self != LawId::NegAntitoneLeq
    }

    /// Number of `(set, element)` arguments the law quantifies over.
    pub fn arity(self) -> (usize, usize) {
        use LawId::*;
        match self {
            NegBounds => (0, 0),
            NegAntichain | NegDisjoint | NegDouble | ImpTop => (1, 0),
            NegAntitone | NegRigid | ImpUnit => (2, 0),
            NegRigidPoint => (1, 1),
            ImpAdjointSet => (1, 2),
            NegP1 | NegP2 | ImpZeroNeg | ConjUnit => (0, 1),
            NegCone | NegP3 | ImpAntichain | ImpUpper | ImpDouble | ImpCone | ImpConeEq1
            | ImpConj | ImpR1 | ImpR3 | ModusPonens | TTerm | ConjComm | SingletonReduction
            | NegAntitoneLeq => (0, 2),
            ImpMonotone | ImpR2 | Adjoint => (0, 3),
        }
    }

    /// Every law that is a theorem.
    pub fn theorems() -> Vec<LawId> {
        LawId::ALL.into_iter().filter(|l| l.is_theorem()).collect()
    }

    /// Resolves a comma-separated selection of law ids and group names
    /// (`all`, `theorems`, `negation`, `implication`, `characterization`,
    /// `probes`).
    pub fn parse_selection(text: &str) -> Result<Vec<LawId>> {
        let mut out = Vec::new();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let group: Vec<LawId> = match part {
                "all" => LawId::ALL.to_vec(),
                "theorems" => LawId::theorems(),
                "negation" => LawId::ALL
                    .into_iter()
                    .filter(|l| l.is_theorem() && l.id().starts_with("neg-"))
                    .collect(),
                "implication" => LawId::ALL
                    .into_iter()
                    .filter(|l| l.is_theorem() && !l.id().starts_with("neg-"))
                    .collect(),
                "characterization" => vec![
                    LawId::NegP1,
                    LawId::NegP2,
                    LawId::NegP3,
                    LawId::ImpR1,
                    LawId::ImpR2,
                    LawId::ImpR3,
                ],
                "probes" => LawId::ALL.into_iter().filter(|l| !l.is_theorem()).collect(),
                single => vec![single.parse()?],
            };
            out.extend(group);
        }
        if out.is_empty() {
            return Err(Error::InvalidArgument("empty law selection".into()));
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for LawId {
    type Err = Error;

    fn from_str(s: &str) -> Result<LawId> {
        LawId::ALL
            .into_iter()
            .find(|l| l.id() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown law `{s}`")))
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// One side of a violated statement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Value {
    Set(ElementSet),
    Bool(bool),
}

impl Value {
    pub fn render(&self, p: &Poset) -> String {
        match self {
            Value::Set(s) => p.format_set(*s),
            Value::Bool(b) => b.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub sets: Vec<ElementSet>,
    pub elements: Vec<usize>,
    pub lhs: Value,
    pub rhs: Value,
}

impl Counterexample {
    pub fn render_witness(&self, p: &Poset) -> String {
        let parts: Vec<String> = self
            .sets
            .iter()
            .map(|s| format!("{{{}}}", p.format_set(*s)))
            .chain(self.elements.iter().map(|&x| p.name(x).to_owned()))
            .collect();
        format!("({})", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub law: &'static str,
    pub statement: &'static str,
    /// False for must-fail probes.
    pub theorem: bool,
    pub pass: bool,
    /// Instances evaluated.
    pub checked: u64,
    /// Instances that violated the law.
    pub violations: u64,
    /// The first few violations, in evaluation order.
    pub counterexamples: Vec<Counterexample>,
}

impl LawReport {
    pub(crate) fn new(law: &'static str, statement: &'static str, theorem: bool) -> Self {
        LawReport {
            law,
            statement,
            theorem,
            pass: true,
            checked: 0,
            violations: 0,
            counterexamples: Vec::new(),
        }
    }

    pub(crate) fn record(&mut self, violation: Option<Counterexample>) {
        self.checked += 1;
        if let Some(cx) = violation {
            self.pass = false;
            self.violations += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(cx);
            }
        }
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        self.counterexamples.first()
    }

    /// One JSON object: `{law, pass, witness?, ...}`.
    pub fn to_json(&self, p: &Poset) -> serde_json::Value {
        let mut obj = json!({
            "law": self.law,
            "pass": self.pass,
            "theorem": self.theorem,
            "checked": self.checked,
            "violations": self.violations,
        });
        if let Some(cx) = self.counterexample() {
            obj["witness"] = witness_json(p, cx);
            obj["counterexamples"] = self
                .counterexamples
                .iter()
                .map(|c| witness_json(p, c))
                .collect();
        }
        obj
    }

    /// A single human-readable line.
    pub fn summary(&self, p: &Poset) -> String {
        let verdict = if self.pass { "pass" } else { "FAIL" };
        let mut line = format!(
            "{verdict:4} {:<20} {} [{} checked]",
            self.law, self.statement, self.checked
        );
        if let Some(cx) = self.counterexample() {
            line.push_str(&format!(
                "; {} violation(s), e.g. {}: {} vs {}",
                self.violations,
                cx.render_witness(p),
                cx.lhs.render(p),
                cx.rhs.render(p)
            ));
        }
        line
    }
}

fn witness_json(p: &Poset, cx: &Counterexample) -> serde_json::Value {
    json!({
        "sets": cx.sets.iter().map(|s| p.format_set(*s)).collect::<Vec<_>>(),
        "elements": cx.elements.iter().map(|&x| p.name(x)).collect::<Vec<_>>(),
        "lhs": cx.lhs.render(p),
        "rhs": cx.rhs.render(p),
    })
}

/// How subset-quantified laws choose their instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Enumerate all non-empty subsets when there are at most this many.
    pub subset_budget: usize,
    /// Otherwise, draw this many random non-empty subsets.
    pub sample_size: usize,
    /// Laws over pairs of subsets use all pairs among this many samples.
    pub pair_sample: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            subset_budget: 255,
            sample_size: 1000,
            pair_sample: 100,
            seed: 0,
        }
    }
}

/// The non-empty subsets laws are checked on, and whether that is all of them.
pub fn subject_sets(n: usize, config: &SuiteConfig) -> (Vec<ElementSet>, bool) {
    let total = if n >= 63 { u64::MAX } else { (1u64 << n) - 1 };
    if total <= config.subset_budget as u64 {
        return ((1..=total).map(ElementSet::from_bits).collect(), true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let full = ElementSet::full(n).bits();
    let sets = (0..config.sample_size)
        .map(|_| loop {
            let bits = rng.gen::<u64>() & full;
            if bits != 0 {
                break ElementSet::from_bits(bits);
            }
        })
        .collect();
    (sets, false)
}

/// Runs `laws` on `alg`, one report per law in the given order.
pub fn run_law_suite(alg: &Algebra, laws: &[LawId], config: &SuiteConfig) -> Vec<LawReport> {
    let (sets, exhaustive) = subject_sets(alg.len(), config);
    let pair_pool = if exhaustive {
        &sets[..]
    } else {
        &sets[..config.pair_sample.min(sets.len())]
    };
    laws.iter()
        .map(|&law| run_law(alg, law, &sets, pair_pool))
        .collect()
}

fn run_law(alg: &Algebra, law: LawId, sets: &[ElementSet], pair_pool: &[ElementSet]) -> LawReport {
    let n = alg.len();
    let mut report = LawReport::new(law.id(), law.statement(), law.is_theorem());
    let mut eval = |s: &[ElementSet], e: &[usize]| {
        let v = evaluate(alg, law, s, e).map(|(lhs, rhs)| Counterexample {
            sets: s.to_vec(),
            elements: e.to_vec(),
            lhs,
            rhs,
        });
        report.record(v);
    };
    match law.arity() {
        (0, 0) => eval(&[], &[]),
        (0, 1) => (0..n).for_each(|a| eval(&[], &[a])),
        (0, 2) => {
            for a in 0..n {
                for b in 0..n {
                    eval(&[], &[a, b]);
                }
            }
        }
        (0, 3) => {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        eval(&[], &[a, b, c]);
                    }
                }
            }
        }
        (1, 0) => sets.iter().for_each(|&s| eval(&[s], &[])),
        (1, 1) => {
            for &s in sets {
                for b in 0..n {
                    eval(&[s], &[b]);
                }
            }
        }
        (1, 2) => {
            for &s in sets {
                for b in 0..n {
                    for c in 0..n {
                        eval(&[s], &[b, c]);
                    }
                }
            }
        }
        (2, 0) => {
            for &s in pair_pool {
                for &t in pair_pool {
                    eval(&[s, t], &[]);
                }
            }
        }
        other => unreachable!("no law has arity {other:?}"),
    }
    report
}

/// Re-evaluates a single instance; true when it still violates `law`.
pub fn recheck(alg: &Algebra, law: LawId, cx: &Counterexample) -> bool {
    evaluate(alg, law, &cx.sets, &cx.elements).is_some()
}

fn single(x: usize) -> ElementSet {
    ElementSet::singleton(x)
}

fn fail_unless(ok: bool, lhs: Value, rhs: Value) -> Option<(Value, Value)> {
    (!ok).then_some((lhs, rhs))
}

fn same(lhs: ElementSet, rhs: ElementSet) -> Option<(Value, Value)> {
    fail_unless(lhs == rhs, Value::Set(lhs), Value::Set(rhs))
}

fn iff(lhs: bool, rhs: bool) -> Option<(Value, Value)> {
    fail_unless(lhs == rhs, Value::Bool(lhs), Value::Bool(rhs))
}

/// Returns `Some((lhs, rhs))` when the instance violates the law.
fn evaluate(alg: &Algebra, law: LawId, s: &[ElementSet], e: &[usize]) -> Option<(Value, Value)> {
    let p = alg.poset();
    let one = alg.one();
    let zero = alg.zero();
    use LawId::*;
    match law {
        NegAntichain => {
            let v = alg.neg_set(s[0]);
            fail_unless(p.is_antichain(v), Value::Set(v), Value::Bool(false))
        }
        NegBounds => {
            let (n0, n1) = (alg.neg(p.bottom()), alg.neg(p.top()));
            fail_unless(n0 == one && n1 == zero, Value::Set(n0), Value::Set(n1))
        }
        NegDisjoint => {
            let v = alg.neg_set(s[0]);
            let cone = p.lambda_unchecked(s[0], v);
            fail_unless(cone == zero, Value::Set(v), Value::Set(cone))
        }
        NegAntitone => {
            if !p.leq1(s[0], s[1]) {
                return None;
            }
            let (na, nb) = (alg.neg_set(s[0]), alg.neg_set(s[1]));
            fail_unless(p.leq1(nb, na), Value::Set(nb), Value::Set(na))
        }
        NegRigid => {
            let (na, nb) = (alg.neg_set(s[0]), alg.neg_set(s[1]));
            if !p.eq1(na, nb) {
                return None;
            }
            same(na, nb)
        }
        NegRigidPoint => {
            let na = alg.neg_set(s[0]);
            let b = single(e[0]);
            if !p.eq1(na, b) {
                return None;
            }
            same(na, b)
        }
        NegDouble => {
            let n1 = alg.neg_set(s[0]);
            let n2 = alg.neg_set(n1);
            let n3 = alg.neg_set(n2);
            if !p.leq1(s[0], n2) {
                return Some((Value::Set(s[0]), Value::Set(n2)));
            }
            same(n3, n1)
        }
        NegCone => {
            let (a, b) = (e[0], e[1]);
            let lhs = p.lambda_unchecked(single(a), alg.neg_set(p.lower_cone(a, b)));
            let rhs = p.lambda_unchecked(single(a), alg.neg(b));
            fail_unless(p.eq1(lhs, rhs), Value::Set(lhs), Value::Set(rhs))
        }
        NegP1 => neg_p1(p, alg.negation_table(), e[0]),
        NegP2 => neg_p2(p, alg.negation_table(), e[0]),
        NegP3 => neg_p3(p, alg.negation_table(), SetNegation::Canonical, e[0], e[1]),
        ImpAntichain => {
            let v = alg.imp(e[0], e[1]);
            fail_unless(p.is_antichain(v), Value::Set(v), Value::Bool(false))
        }
        ImpUpper => {
            let v = alg.imp(e[0], e[1]);
            fail_unless(
                p.leq1(single(e[1]), v),
                Value::Set(single(e[1])),
                Value::Set(v),
            )
        }
        ImpDouble => {
            let (a, b) = (e[0], e[1]);
            let v = alg.imp_set(alg.imp(a, b), single(b));
            fail_unless(p.leq1(single(a), v), Value::Set(single(a)), Value::Set(v))
        }
        ImpMonotone => {
            let (a, b, c) = (e[0], e[1], e[2]);
            if !p.leq(a, b) {
                return None;
            }
            let (ca, cb) = (alg.imp(c, a), alg.imp(c, b));
            if !p.leq1(ca, cb) {
                return Some((Value::Set(ca), Value::Set(cb)));
            }
            let (bc, ac) = (alg.imp(b, c), alg.imp(a, c));
            fail_unless(p.leq1(bc, ac), Value::Set(bc), Value::Set(ac))
        }
        ImpCone => {
            let (a, b) = (e[0], e[1]);
            same(
                p.lambda_unchecked(single(a), alg.imp(a, b)),
                p.lower_cone(a, b),
            )
        }
        ImpConeEq1 => {
            let (a, b) = (e[0], e[1]);
            let v = p.lambda_unchecked(alg.imp(a, b), single(b));
            fail_unless(p.eq1(v, single(b)), Value::Set(v), Value::Set(single(b)))
        }
        ImpTop => {
            let v = alg.imp_set(one, s[0]);
            let max = p.max_elements(s[0]);
            if v != max {
                return same(v, max);
            }
            if p.is_antichain(s[0]) {
                return same(v, s[0]);
            }
            None
        }
        ImpUnit => iff(alg.imp_set(s[0], s[1]) == one, p.leq1(s[0], s[1])),
        ImpAdjointSet => {
            let (b, c) = (e[0], e[1]);
            iff(
                p.leq_all(alg.conj_set(s[0], single(b)), single(c)),
                p.leq1(s[0], alg.imp(b, c)),
            )
        }
        ImpConj => {
            let (a, b) = (e[0], e[1]);
            same(alg.conj_set(single(a), alg.imp(a, b)), alg.conj(a, b))
        }
        ImpR1 => imp_r1(p, alg.implication_table(), e[0], e[1]),
        ImpR2 => imp_r2(p, alg.implication_table(), e[0], e[1], e[2]),
        ImpR3 => imp_r3(p, alg.implication_table(), e[0], e[1]),
        Adjoint => {
            let (x, y, z) = (e[0], e[1], e[2]);
            iff(
                p.leq_all(alg.conj(x, y), single(z)),
                p.leq1(single(x), alg.imp(y, z)),
            )
        }
        ModusPonens => {
            let (x, y) = (e[0], e[1]);
            let v = alg.conj_set(alg.imp(x, y), single(x));
            fail_unless(p.leq1(v, single(y)), Value::Set(v), Value::Set(single(y)))
        }
        ImpZeroNeg => same(alg.imp(e[0], p.bottom()), alg.neg(e[0])),
        TTerm => {
            let (a, b) = (e[0], e[1]);
            iff(alg.conj_set(alg.imp(a, b), alg.imp(b, a)) == one, a == b)
        }
        ConjUnit => {
            let x = e[0];
            let (r, l) = (alg.conj(x, p.top()), alg.conj(p.top(), x));
            if r != single(x) {
                return same(r, single(x));
            }
            same(l, single(x))
        }
        ConjComm => same(alg.conj(e[0], e[1]), alg.conj(e[1], e[0])),
        SingletonReduction => {
            let (a, b) = (e[0], e[1]);
            let (sa, sb) = (single(a), single(b));
            let checks = [
                (negation_set_unchecked(p, sa), alg.neg(a)),
                (implication_set_unchecked(p, sa, sb), alg.imp(a, b)),
                (p.max_elements(p.lambda_unchecked(sa, sb)), alg.conj(a, b)),
            ];
            checks.into_iter().find_map(|(l, r)| same(l, r))
        }
        NegAntitoneLeq => {
            let (a, b) = (e[0], e[1]);
            if a == b || !p.leq(a, b) {
                return None;
            }
            let (nb, na) = (alg.neg(b), alg.neg(a));
            fail_unless(p.leq_all(nb, na), Value::Set(nb), Value::Set(na))
        }
    }
}

/// How (P3) extends a candidate unary table to the computed sets `L(x,y)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SetNegation {
    /// `A⁰ = Max{z | L(z,w) = 0 for all w ∈ A}`, independent of the
    /// candidate. Only the pointwise values `y⁰` come from the candidate.
    #[default]
    Canonical,
    /// `A⁰ = Max{z | z ≤₁ w⁰ for all w ∈ A}` using the candidate's values.
    /// Agrees with `Canonical` on the true table, but leaves `0⁰`
    /// unconstrained on posets with a single atom.
    Pointwise,
}

fn neg_p1(p: &Poset, t: &UnaryTable, x: usize) -> Option<(Value, Value)> {
    let v = t.get(x);
    fail_unless(p.is_antichain(v), Value::Set(v), Value::Bool(false))
}

fn neg_p2(p: &Poset, t: &UnaryTable, x: usize) -> Option<(Value, Value)> {
    let v = t.get(x);
    let cone = p.lambda_unchecked(single(x), v);
    fail_unless(cone == single(p.bottom()), Value::Set(v), Value::Set(cone))
}

fn extend_negation(p: &Poset, t: &UnaryTable, mode: SetNegation, a: ElementSet) -> ElementSet {
    match mode {
        SetNegation::Canonical => negation_set_unchecked(p, a),
        SetNegation::Pointwise => {
            let region = a.iter().fold(p.carrier(), |acc, w| {
                acc.intersection(p.down_closure(t.get(w)))
            });
            p.max_elements(region)
        }
    }
}

fn neg_p3(
    p: &Poset,
    t: &UnaryTable,
    mode: SetNegation,
    x: usize,
    y: usize,
) -> Option<(Value, Value)> {
    let ext = extend_negation(p, t, mode, p.lower_cone(x, y));
    let lhs = p.lambda_unchecked(single(x), ext);
    let rhs = p.lambda_unchecked(single(x), t.get(y));
    fail_unless(p.eq1(lhs, rhs), Value::Set(lhs), Value::Set(rhs))
}

fn imp_r1(p: &Poset, t: &BinaryTable, x: usize, y: usize) -> Option<(Value, Value)> {
    let v = t.get(x, y);
    fail_unless(p.is_antichain(v), Value::Set(v), Value::Bool(false))
}

fn imp_r2(p: &Poset, t: &BinaryTable, x: usize, y: usize, z: usize) -> Option<(Value, Value)> {
    if !p.lower_cone(x, z).is_subset(p.down(y)) {
        return None;
    }
    let v = t.get(x, y);
    fail_unless(p.leq1(single(z), v), Value::Set(single(z)), Value::Set(v))
}

fn imp_r3(p: &Poset, t: &BinaryTable, x: usize, y: usize) -> Option<(Value, Value)> {
    same(
        p.lambda_unchecked(single(x), t.get(x, y)),
        p.lower_cone(x, y),
    )
}

/// Result of checking a candidate table against a characterization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Characterization {
    pub holds: bool,
    pub reports: Vec<LawReport>,
}

impl Characterization {
    fn from_reports(reports: Vec<LawReport>) -> Self {
        Characterization {
            holds: reports.iter().all(|r| r.pass),
            reports,
        }
    }

    /// Ids of the conditions that failed.
    pub fn violated(&self) -> Vec<&'static str> {
        self.reports
            .iter()
            .filter(|r| !r.pass)
            .map(|r| r.law)
            .collect()
    }
}

fn counterexample(elements: &[usize], (lhs, rhs): (Value, Value)) -> Counterexample {
    Counterexample {
        sets: Vec::new(),
        elements: elements.to_vec(),
        lhs,
        rhs,
    }
}

/// Checks (P1)–(P3) for a candidate negation table. They hold exactly when the
/// candidate is the unsharp negation.
pub fn check_negation_characterization(
    p: &Poset,
    candidate: &UnaryTable,
) -> Result<Characterization> {
    check_negation_characterization_with(p, candidate, SetNegation::Canonical)
}

pub fn check_negation_characterization_with(
    p: &Poset,
    candidate: &UnaryTable,
    mode: SetNegation,
) -> Result<Characterization> {
    candidate.check_shape(p)?;
    let n = p.len();
    let mut p1 = LawReport::new(LawId::NegP1.id(), LawId::NegP1.statement(), true);
    let mut p2 = LawReport::new(LawId::NegP2.id(), LawId::NegP2.statement(), true);
    let mut p3 = LawReport::new(LawId::NegP3.id(), LawId::NegP3.statement(), true);
    for x in 0..n {
        p1.record(neg_p1(p, candidate, x).map(|v| counterexample(&[x], v)));
        p2.record(neg_p2(p, candidate, x).map(|v| counterexample(&[x], v)));
        for y in 0..n {
            p3.record(neg_p3(p, candidate, mode, x, y).map(|v| counterexample(&[x, y], v)));
        }
    }
    Ok(Characterization::from_reports(vec![p1, p2, p3]))
}

/// Checks (R1)–(R3) for a candidate implication table. They hold exactly when
/// the candidate is the unsharp implication.
pub fn check_implication_characterization(
    p: &Poset,
    candidate: &BinaryTable,
) -> Result<Characterization> {
    candidate.check_shape(p)?;
    let n = p.len();
    let mut r1 = LawReport::new(LawId::ImpR1.id(), LawId::ImpR1.statement(), true);
    let mut r2 = LawReport::new(LawId::ImpR2.id(), LawId::ImpR2.statement(), true);
    let mut r3 = LawReport::new(LawId::ImpR3.id(), LawId::ImpR3.statement(), true);
    for x in 0..n {
        for y in 0..n {
            r1.record(imp_r1(p, candidate, x, y).map(|v| counterexample(&[x, y], v)));
            r3.record(imp_r3(p, candidate, x, y).map(|v| counterexample(&[x, y], v)));
            for z in 0..n {
                r2.record(imp_r2(p, candidate, x, y, z).map(|v| counterexample(&[x, y, z], v)));
            }
        }
    }
    Ok(Characterization::from_reports(vec![r1, r2, r3]))
}

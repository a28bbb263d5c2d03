//! Exhaustive and random generation of finite bounded posets, and law sweeps
//! over the generated families.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::connectives::Algebra;
use crate::error::{Error, Result};
use crate::io;
use crate::laws::{run_law_suite, LawId, LawReport, SuiteConfig};
use crate::poset::Poset;

/// Largest `n` accepted by [`all_bounded_posets`].
pub const MAX_ENUMERATION: usize = 6;

/// Largest `n` accepted by [`canonical_form`].
pub const MAX_CANONICAL: usize = 8;

/// Relation between two inner elements during backtracking.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Rel {
    Unknown,
    Below,
    Above,
    Apart,
}

/// Every partial order on `k` elements, as `lt[i][j]` matrices, built pair
/// by pair and pruned whenever a decided triple breaks transitivity.
fn inner_orders(k: usize) -> Vec<Vec<Vec<bool>>> {
    let pairs: Vec<(usize, usize)> = (0..k).tuple_combinations().collect();
    let mut rel = vec![vec![Rel::Unknown; k]; k];
    let mut out = Vec::new();
    extend(&pairs, 0, &mut rel, &mut out);
    out
}

fn lt(rel: &[Vec<Rel>], i: usize, j: usize) -> Option<bool> {
    if i == j {
        return Some(false);
    }
    let (r, flip) = if i < j {
        (rel[i][j], false)
    } else {
        (rel[j][i], true)
    };
    match (r, flip) {
        (Rel::Unknown, _) => None,
        (Rel::Below, false) | (Rel::Above, true) => Some(true),
        _ => Some(false),
    }
}

/// Transitivity on every triple through `i` and `j` whose pairs are decided.
fn consistent(rel: &[Vec<Rel>], i: usize, j: usize) -> bool {
    let k = rel.len();
    for z in 0..k {
        if z == i || z == j {
            continue;
        }
        for (a, b, c) in [
            (i, j, z),
            (j, i, z),
            (z, i, j),
            (z, j, i),
            (i, z, j),
            (j, z, i),
        ] {
            if let (Some(true), Some(true)) = (lt(rel, a, b), lt(rel, b, c)) {
                if lt(rel, a, c) == Some(false) {
                    return false;
                }
            }
        }
    }
    true
}

fn extend(
    pairs: &[(usize, usize)],
    at: usize,
    rel: &mut Vec<Vec<Rel>>,
    out: &mut Vec<Vec<Vec<bool>>>,
) {
    let k = rel.len();
    if at == pairs.len() {
        out.push(
            (0..k)
                .map(|i| (0..k).map(|j| lt(rel, i, j) == Some(true)).collect())
                .collect(),
        );
        return;
    }
    let (i, j) = pairs[at];
    for r in [Rel::Below, Rel::Above, Rel::Apart] {
        rel[i][j] = r;
        if consistent(rel, i, j) {
            extend(pairs, at + 1, rel, out);
        }
    }
    rel[i][j] = Rel::Unknown;
}

fn inner_label(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("x{i}")
    }
}

/// Every labeled bounded poset on `n` elements.
///
/// Elements keep their positions `0..n`; for each choice of bottom and top
/// position the remaining positions carry every partial order. The bottom
/// is labeled `0`, the top `1` and the rest `a`, `b`, .. in position order.
/// A one-element poset is labeled `1`.
pub fn all_bounded_posets(n: usize) -> Result<Vec<Poset>> {
    if n == 0 {
        return Err(Error::EmptyPoset);
    }
    if n > MAX_ENUMERATION {
        return Err(Error::BoundExceeded {
            what: "enumerated poset size",
            n,
            max: MAX_ENUMERATION,
        });
    }
    if n == 1 {
        return Ok(vec![Poset::from_order(vec!["1".into()], |_, _| true)?]);
    }
    let orders = inner_orders(n - 2);
    let mut out = Vec::new();
    for bottom in 0..n {
        for top in (0..n).filter(|&t| t != bottom) {
            let inner: Vec<usize> = (0..n).filter(|&x| x != bottom && x != top).collect();
            let mut slot = vec![usize::MAX; n];
            let mut names = vec![String::new(); n];
            names[bottom] = "0".into();
            names[top] = "1".into();
            for (k, &x) in inner.iter().enumerate() {
                slot[x] = k;
                names[x] = inner_label(k);
            }
            for lt in &orders {
                let leq = |x: usize, y: usize| {
                    x == y
                        || x == bottom
                        || y == top
                        || (x != top && y != bottom && lt[slot[x]][slot[y]])
                };
                out.push(Poset::from_order(names.clone(), leq)?);
            }
        }
    }
    Ok(out)
}

/// A random bounded poset: `n - 2` inner elements with each pair `i < j`
/// related with probability `edge_prob`, transitively closed, between a fresh
/// bottom `0` and top `1`.
pub fn random_bounded_poset(n: usize, edge_prob: f64, seed: u64) -> Result<Poset> {
    if n == 0 {
        return Err(Error::EmptyPoset);
    }
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(Error::InvalidArgument(format!(
            "edge probability {edge_prob} is outside [0, 1]"
        )));
    }
    if n > crate::set::MAX_ELEMENTS {
        return Err(Error::TooLarge(n));
    }
    if n == 1 {
        return Poset::from_covers(vec!["1".into()], &[]);
    }
    let k = n - 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut names = vec!["0".to_owned()];
    names.extend((0..k).map(inner_label));
    names.push("1".into());
    let top = n - 1;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if rng.gen_bool(edge_prob) {
                edges.push((i + 1, j + 1));
            }
        }
    }
    for x in 1..=k {
        edges.push((0, x));
        edges.push((x, top));
    }
    if k == 0 {
        edges.push((0, top));
    }
    Poset::from_covers(names, &edges)
}

/// Order matrix as a bit string, row by row.
fn matrix_key(p: &Poset, perm: &[usize]) -> String {
    let mut key = String::with_capacity(perm.len() * perm.len());
    for &x in perm {
        for &y in perm {
            key.push(if p.leq(x, y) { '1' } else { '0' });
        }
    }
    key
}

/// The lexicographically smallest order matrix over all orderings of the
/// elements, prefixed with the size: isomorphic posets map to the same string.
pub fn canonical_form(p: &Poset) -> Result<String> {
    let n = p.len();
    if n > MAX_CANONICAL {
        return Err(Error::BoundExceeded {
            what: "canonical form size",
            n,
            max: MAX_CANONICAL,
        });
    }
    let best = (0..n)
        .permutations(n)
        .map(|perm| matrix_key(p, &perm))
        .min()
        .unwrap_or_default();
    Ok(format!("{n}:{best}"))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GeneratorSpec {
    /// Every labeled bounded poset with `n` elements.
    All { n: usize },
    /// `random_bounded_poset(n, prob, s)` for `s` in `first_seed..first_seed + seeds`.
    Random {
        n: usize,
        seeds: u64,
        prob: f64,
        first_seed: u64,
    },
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<Vec<Poset>> {
        match *self {
            GeneratorSpec::All { n } => all_bounded_posets(n),
            GeneratorSpec::Random {
                n,
                seeds,
                prob,
                first_seed,
            } => (first_seed..first_seed + seeds)
                .map(|s| random_bounded_poset(n, prob, s))
                .collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepFailure {
    /// The poset as a JSON document, loadable with [`io::parse`].
    pub poset: String,
    /// Canonical form when small enough, otherwise the document itself.
    pub key: String,
    pub report: LawReport,
}

impl SweepFailure {
    pub fn to_json(&self) -> Result<serde_json::Value> {
        let p = io::parse(&self.poset)?;
        Ok(serde_json::json!({
            "poset": serde_json::from_str::<serde_json::Value>(&self.poset).expect("valid JSON"),
            "key": self.key,
            "report": self.report.to_json(&p),
        }))
    }
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub generator: GeneratorSpec,
    pub posets_checked: usize,
    pub laws: Vec<LawId>,
    /// Sorted by key, then law id.
    pub failures: Vec<SweepFailure>,
}

impl SweepReport {
    /// Failures of laws that are theorems; probe failures are expected.
    pub fn theorem_failures(&self) -> impl Iterator<Item = &SweepFailure> {
        self.failures.iter().filter(|f| f.report.theorem)
    }
}

/// Runs `laws` on every poset from `generator` in parallel.
pub fn sweep(
    generator: &GeneratorSpec,
    laws: &[LawId],
    config: &SuiteConfig,
) -> Result<SweepReport> {
    let posets = generator.generate()?;
    let mut failures: Vec<SweepFailure> = posets
        .par_iter()
        .flat_map_iter(|p| {
            let alg = Algebra::new(p.clone());
            let failed: Vec<LawReport> = run_law_suite(&alg, laws, config)
                .into_iter()
                .filter(|r| !r.pass)
                .collect();
            let doc = io::serialize(p);
            let key = canonical_form(p).unwrap_or_else(|_| doc.clone());
            failed.into_iter().map(move |report| SweepFailure {
                poset: doc.clone(),
                key: key.clone(),
                report,
            })
        })
        .collect();
    failures
        .sort_by(|a, b| (&a.key, a.report.law, &a.poset).cmp(&(&b.key, b.report.law, &b.poset)));
    Ok(SweepReport {
        generator: *generator,
        posets_checked: posets.len(),
        laws: laws.to_vec(),
        failures,
    })
}

//! Sample posets shared by unit tests.

use crate::poset::Poset;
use crate::set::ElementSet;

fn build(names: &[&str], covers: &[(&str, &str)]) -> Poset {
    Poset::from_labeled_covers(names, covers).unwrap()
}

pub fn diamond() -> Poset {
    build(
        &["0", "a", "b", "1"],
        &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
    )
}

pub fn chain(n: usize) -> Poset {
    let names: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
    let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Poset::from_covers(names, &covers).unwrap()
}

pub fn p1() -> Poset {
    build(
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
}

pub fn p2() -> Poset {
    build(
        &["0", "a", "b", "c", "d", "e", "f", "1"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("0", "d"),
            ("0", "e"),
            ("b", "f"),
            ("c", "f"),
            ("d", "f"),
            ("a", "1"),
            ("e", "1"),
            ("f", "1"),
        ],
    )
}

pub fn p3() -> Poset {
    build(
        &["0", "a", "b", "c", "d", "e", "1"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("a", "d"),
            ("a", "e"),
            ("b", "d"),
            ("b", "e"),
            ("c", "1"),
            ("d", "1"),
            ("e", "1"),
        ],
    )
}

pub fn p4() -> Poset {
    build(
        &["0", "a", "b", "c", "d", "e", "1"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("a", "c"),
            ("a", "e"),
            ("b", "d"),
            ("b", "e"),
            ("c", "d"),
            ("d", "1"),
            ("e", "1"),
        ],
    )
}

pub fn el(p: &Poset, label: &str) -> usize {
    p.index_of(label).unwrap()
}

pub fn set(p: &Poset, text: &str) -> ElementSet {
    p.parse_set(text).unwrap()
}

//! `SL_2(F_p)` construction and the SL_2(F_5) element fixture.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{ConjugacyData, GroupError, GroupTable};

/// Primes above this bound are refused; the table has `(p(p^2-1))^2` cells.
pub const MAX_SL2_PRIME: u32 = 13;

/// Row-major `[a, b, c, d]` for the matrix `((a, b), (c, d))`.
pub type Mat2 = [u32; 4];

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// All determinant-one matrices over `F_p`, lexicographic in `(a, b, c, d)`.
pub fn sl2_elements(p: u32) -> Vec<Mat2> {
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a * d + p * p - b * c) % p == 1 {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

fn mat_mul(x: Mat2, y: Mat2, p: u32) -> Mat2 {
    [
        (x[0] * y[0] + x[1] * y[2]) % p,
        (x[0] * y[1] + x[1] * y[3]) % p,
        (x[2] * y[0] + x[3] * y[2]) % p,
        (x[2] * y[1] + x[3] * y[3]) % p,
    ]
}

pub fn format_mat(m: Mat2) -> String {
    format!("[[{},{}],[{},{}]]", m[0], m[1], m[2], m[3])
}

/// `SL_2(F_p)` with elements indexed in lexicographic order of their entries.
pub fn make_sl2(p: u32) -> Result<GroupTable, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    if p > MAX_SL2_PRIME {
        return Err(GroupError::PrimeTooLarge { p, max: MAX_SL2_PRIME });
    }
    let elements = sl2_elements(p);
    let index: HashMap<Mat2, u32> = elements
        .iter()
        .enumerate()
        .map(|(i, &m)| (m, i as u32))
        .collect();
    let n = elements.len();
    let mut mul = Vec::with_capacity(n * n);
    for &x in &elements {
        for &y in &elements {
            mul.push(index[&mat_mul(x, y, p)]);
        }
    }
    let labels = elements.iter().map(|&m| format_mat(m)).collect();
    Ok(GroupTable::from_flat(n, mul, None)?.with_labels(labels))
}

/// Class names for SL_2(F_5) in character-table column order, with the
/// representative matrix used to identify each class.
pub const SL2F5_CLASS_REPS: [(&str, Mat2); 9] = [
    ("I", [1, 0, 0, 1]),
    ("-I", [4, 0, 0, 4]),
    ("alpha", [2, 0, 0, 3]),
    ("beta", [0, 4, 1, 4]),
    ("beta'", [0, 4, 1, 1]),
    ("gamma", [1, 1, 0, 1]),
    ("gamma'", [1, 2, 0, 1]),
    ("-gamma", [4, 4, 0, 4]),
    ("-gamma'", [4, 3, 0, 4]),
];

/// For each named class (column order above), the index of the computed
/// class containing its representative.
pub fn sl2f5_named_classes(cd: &ConjugacyData) -> Result<[usize; 9], GroupError> {
    let elements = sl2_elements(5);
    if cd.class_map().len() != elements.len() {
        return Err(GroupError::FixtureCardinality {
            expected: elements.len(),
            found: cd.class_map().len(),
        });
    }
    let mut out = [0usize; 9];
    for (slot, (_, m)) in out.iter_mut().zip(SL2F5_CLASS_REPS.iter()) {
        let idx = elements.iter().position(|e| e == m).expect("det-1 matrix");
        *slot = cd.class_of(idx);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureElement {
    pub name: String,
    pub matrix: [[u32; 2]; 2],
    pub class: String,
}

/// Element list of SL_2(F_p) with an expected class label per element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sl2Fixture {
    pub prime: u32,
    pub elements: Vec<FixtureElement>,
}

const APPENDIX_JSON: &str = include_str!("../../data/sl2f5_appendix.json");

impl Sl2Fixture {
    /// The shipped 120-element SL_2(F_5) listing with labels `c1..c9`.
    pub fn builtin() -> Self {
        Self::from_json(APPENDIX_JSON).expect("bundled fixture parses")
    }

    pub fn from_json(text: &str) -> Result<Self, GroupError> {
        serde_json::from_str(text).map_err(|e| GroupError::FixtureParse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("fixture serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureMismatch {
    pub name: String,
    pub expected: String,
    pub computed: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureReport {
    pub checked: usize,
    pub mismatches: Vec<FixtureMismatch>,
}

/// Checks the fixture against a computed SL_2(F_5).
///
/// Every fixture matrix must have determinant one and occur exactly once, the
/// listing must cover the group, and each element's computed class (named
/// `c1..c9` in character-table column order) must equal its label.
pub fn verify_sl2f5_fixture(
    group: &GroupTable,
    fixture: &Sl2Fixture,
) -> Result<FixtureReport, GroupError> {
    let p = fixture.prime;
    let elements = sl2_elements(p);
    if p != 5 || group.order() != elements.len() {
        return Err(GroupError::FixtureCardinality {
            expected: group.order(),
            found: elements.len(),
        });
    }
    if fixture.elements.len() != elements.len() {
        return Err(GroupError::FixtureCardinality {
            expected: elements.len(),
            found: fixture.elements.len(),
        });
    }
    let index: HashMap<Mat2, usize> = elements.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let cd = ConjugacyData::compute(group);
    let named = sl2f5_named_classes(&cd)?;
    let label_of_class = |c: usize| {
        named
            .iter()
            .position(|&k| k == c)
            .map(|i| format!("c{}", i + 1))
            .unwrap_or_else(|| "?".into())
    };

    let mut seen = vec![false; elements.len()];
    let mut mismatches = Vec::new();
    for fe in &fixture.elements {
        let m = [fe.matrix[0][0], fe.matrix[0][1], fe.matrix[1][0], fe.matrix[1][1]];
        let idx = *index.get(&m).ok_or_else(|| GroupError::FixtureBadMatrix(fe.name.clone()))?;
        if std::mem::replace(&mut seen[idx], true) {
            return Err(GroupError::FixtureDuplicate(fe.name.clone()));
        }
        let computed = label_of_class(cd.class_of(idx));
        if computed != fe.class {
            mismatches.push(FixtureMismatch {
                name: fe.name.clone(),
                expected: fe.class.clone(),
                computed,
            });
        }
    }
    Ok(FixtureReport {
        checked: fixture.elements.len(),
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_count(p: u32) -> usize {
        let mut k = 0;
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    for d in 0..p {
                        if (a * d) % p == (b * c + 1) % p {
                            k += 1;
                        }
                    }
                }
            }
        }
        k
    }

    #[test]
    fn orders() {
        assert_eq!(brute_count(2), 6);
        assert_eq!(brute_count(3), 24);
        assert_eq!(make_sl2(2).unwrap().order(), 6);
        assert_eq!(make_sl2(3).unwrap().order(), 24);
        assert_eq!(make_sl2(5).unwrap().order(), 120);
    }

    #[test]
    fn rejects_bad_primes() {
        assert!(matches!(make_sl2(4), Err(GroupError::NotPrime(4))));
        assert!(matches!(make_sl2(1), Err(GroupError::NotPrime(1))));
        assert!(matches!(make_sl2(17), Err(GroupError::PrimeTooLarge { .. })));
    }

    #[test]
    fn fixture_matches() {
        let g = make_sl2(5).unwrap();
        let report = verify_sl2f5_fixture(&g, &Sl2Fixture::builtin()).unwrap();
        assert_eq!(report.checked, 120);
        assert!(report.mismatches.is_empty(), "{:?}", report.mismatches);
    }

    #[test]
    fn fixture_names_follow_lexicographic_order() {
        let elements = sl2_elements(5);
        for fe in Sl2Fixture::builtin().elements {
            let k: usize = fe.name[1..].parse().unwrap();
            let m = elements[k - 1];
            assert_eq!(fe.matrix, [[m[0], m[1]], [m[2], m[3]]]);
        }
    }

    #[test]
    fn injected_relabel_is_reported() {
        let g = make_sl2(5).unwrap();
        let mut fx = Sl2Fixture::builtin();
        let g1 = fx.elements.iter_mut().find(|e| e.name == "g1").unwrap();
        g1.class = "c4".into();
        let report = verify_sl2f5_fixture(&g, &fx).unwrap();
        assert_eq!(report.mismatches.len(), 1);
        assert_eq!(report.mismatches[0].name, "g1");
        assert_eq!(report.mismatches[0].computed, "c3");
    }

    #[test]
    fn missing_element_is_a_cardinality_error() {
        let g = make_sl2(5).unwrap();
        let mut fx = Sl2Fixture::builtin();
        fx.elements.pop();
        assert!(matches!(
            verify_sl2f5_fixture(&g, &fx),
            Err(GroupError::FixtureCardinality { expected: 120, found: 119 })
        ));
    }

    #[test]
    fn fixture_json_round_trip() {
        let fx = Sl2Fixture::builtin();
        assert_eq!(Sl2Fixture::from_json(&fx.to_json()).unwrap(), fx);
    }
}

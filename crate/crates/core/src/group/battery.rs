//! Small groups used for cross-method checks.

use std::collections::HashMap;

use super::{make_sl2, GroupError, GroupTable};

/// The closure of a set of permutations of `0..degree` under composition.
///
/// Elements are ordered by discovery (breadth first from the identity), so the
/// identity is element 0. Products compose right to left: `(p * q)(x) =
/// p(q(x))`.
pub fn permutation_group(gens: &[Vec<usize>]) -> Result<GroupTable, GroupError> {
    let degree = gens.first().map_or(1, Vec::len);
    let id: Vec<usize> = (0..degree).collect();
    let mut elements = vec![id.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
    let mut i = 0;
    while i < elements.len() {
        for g in gens {
            let next: Vec<usize> = (0..degree).map(|x| g[elements[i][x]]).collect();
            if !index.contains_key(&next) {
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
        i += 1;
    }
    let rows: Vec<Vec<usize>> = elements
        .iter()
        .map(|p| {
            elements
                .iter()
                .map(|q| index[&(0..degree).map(|x| p[q[x]]).collect::<Vec<_>>()])
                .collect()
        })
        .collect();
    GroupTable::from_cayley(&rows)
}

pub fn symmetric3() -> GroupTable {
    permutation_group(&[vec![1, 0, 2], vec![1, 2, 0]]).expect("S3")
}

/// Symmetries of the regular `k`-gon, order `2k`.
pub fn dihedral(k: usize) -> GroupTable {
    let rot: Vec<usize> = (0..k).map(|x| (x + 1) % k).collect();
    let refl: Vec<usize> = (0..k).map(|x| (k - x) % k).collect();
    permutation_group(&[rot, refl]).expect("dihedral")
}

/// The quaternion group `{±1, ±i, ±j, ±k}`; element `2u + s` is
/// `(-1)^s` times unit `u` in `1, i, j, k`.
pub fn quaternion8() -> GroupTable {
    // unit products: (sign, unit)
    const UNIT: [[(u8, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let rows: Vec<Vec<usize>> = (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (s, u) = UNIT[x / 2][y / 2];
                    let sign = (x % 2) ^ (y % 2) ^ s as usize;
                    2 * u + sign
                })
                .collect()
        })
        .collect();
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];
    GroupTable::from_cayley(&rows)
        .expect("Q8")
        .with_labels(labels.iter().map(|s| s.to_string()).collect())
}

#[derive(Debug, Clone)]
pub struct BatteryGroup {
    pub name: String,
    pub group: GroupTable,
}

/// `Z_1..Z_12`, `Z_2 x Z_2`, `S_3`, `Q_8`, `D_4` and `SL_2(F_3)`.
pub fn battery() -> Vec<BatteryGroup> {
    let mut out: Vec<BatteryGroup> = (1..=12)
        .map(|n| BatteryGroup {
            name: format!("Z{n}"),
            group: GroupTable::cyclic(n).expect("cyclic"),
        })
        .collect();
    let z2 = GroupTable::cyclic(2).expect("Z2");
    out.push(BatteryGroup {
        name: "Z2xZ2".into(),
        group: GroupTable::direct_product(&z2, &z2).expect("V4"),
    });
    out.push(BatteryGroup { name: "S3".into(), group: symmetric3() });
    out.push(BatteryGroup { name: "Q8".into(), group: quaternion8() });
    out.push(BatteryGroup { name: "D4".into(), group: dihedral(4) });
    out.push(BatteryGroup {
        name: "SL2(F3)".into(),
        group: make_sl2(3).expect("SL2(F3)"),
    });
    out
}

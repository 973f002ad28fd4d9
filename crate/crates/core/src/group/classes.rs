use super::GroupTable;

/// Partition of a group into conjugacy classes.
///
/// Classes are numbered by their smallest member, which is also the stored
/// representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyData {
    class_of: Vec<usize>,
    reps: Vec<usize>,
    sizes: Vec<usize>,
}

impl ConjugacyData {
    /// Orbit closure under conjugation. Scanning elements in index order
    /// makes each new class start at its minimum.
    pub fn compute(group: &GroupTable) -> Self {
        let n = group.order();
        let mut class_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for g in 0..n {
            if class_of[g] != usize::MAX {
                continue;
            }
            let c = reps.len();
            let mut size = 0;
            for h in 0..n {
                let x = group.conjugate(g, h);
                if class_of[x] == usize::MAX {
                    class_of[x] = c;
                    size += 1;
                }
            }
            reps.push(g);
            sizes.push(size);
        }
        Self {
            class_of,
            reps,
            sizes,
        }
    }

    pub fn num_classes(&self) -> usize {
        self.reps.len()
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn class_map(&self) -> &[usize] {
        &self.class_of
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Centralizer order of any element of class `c`.
    pub fn centralizer_order(&self, c: usize) -> usize {
        self.class_of.len() / self.sizes[c]
    }

    /// `[r] -> [r^k]` for each class representative `r`.
    pub fn power_map(&self, group: &GroupTable, k: u64) -> Vec<usize> {
        self.reps
            .iter()
            .map(|&r| self.class_of(group.pow(r, k)))
            .collect()
    }

    /// The involution `[x] -> [x^-1]` on classes together with the number of
    /// its orbits.
    pub fn inversion(&self, group: &GroupTable) -> InversionAction {
        let perm: Vec<usize> = self
            .reps
            .iter()
            .map(|&r| self.class_of(group.inv(r)))
            .collect();
        let fixed = perm.iter().enumerate().filter(|&(c, &p)| c == p).count();
        let orbit_count = fixed + (perm.len() - fixed) / 2;
        InversionAction { perm, orbit_count }
    }
}

/// The action of inversion on conjugacy classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InversionAction {
    pub perm: Vec<usize>,
    /// Number of orbits, i.e. the dimension of the coinvariants of the class
    /// space under inversion.
    pub orbit_count: usize,
}

impl InversionAction {
    pub fn is_trivial(&self) -> bool {
        self.perm.iter().enumerate().all(|(c, &p)| c == p)
    }
}

/// Convenience wrapper for [`ConjugacyData::compute`].
pub fn conjugacy_classes(group: &GroupTable) -> ConjugacyData {
    ConjugacyData::compute(group)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_classes_are_singletons() {
        let z15 = GroupTable::cyclic(15).unwrap();
        let cd = conjugacy_classes(&z15);
        assert_eq!(cd.num_classes(), 15);
        assert!(cd.sizes().iter().all(|&s| s == 1));
    }

    #[test]
    fn cyclic_power_and_inversion() {
        let z5 = GroupTable::cyclic(5).unwrap();
        let cd = conjugacy_classes(&z5);
        assert_eq!(cd.power_map(&z5, 2)[1], 2);
        let inv = cd.inversion(&z5);
        assert_eq!(inv.perm, vec![0, 4, 3, 2, 1]);
        assert_eq!(inv.orbit_count, 3);

        let z4 = GroupTable::cyclic(4).unwrap();
        assert_eq!(conjugacy_classes(&z4).inversion(&z4).orbit_count, 3);
    }

    #[test]
    fn cyclic_orbit_count_formula() {
        for n in 1..=30 {
            let g = GroupTable::cyclic(n).unwrap();
            assert_eq!(conjugacy_classes(&g).inversion(&g).orbit_count, n / 2 + 1);
        }
    }
}

use crate::error::{Error, Result};
use crate::symmetry::element::PointOp;

/// A finite group given by its multiplication table; element 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    pub name: String,
    pub table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    pub fn new(name: impl Into<String>, table: Vec<Vec<usize>>) -> Self {
        FiniteGroup { name: name.into(), table }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn c4v() -> Self {
        let ops = PointOp::ALL;
        let table = ops.iter().map(|a| ops.iter().map(|b| a.compose(*b).index()).collect()).collect();
        FiniteGroup::new("C4v", table)
    }

    /// Z2 x Z2 x Z2.
    pub fn d2h() -> Self {
        let table = (0..8).map(|a| (0..8).map(|b| a ^ b).collect()).collect();
        FiniteGroup::new("D2h", table)
    }

    /// C4v x Z2, element (c, z) at index 2c + z.
    pub fn d4h() -> Self {
        let c = Self::c4v();
        let table = (0..16)
            .map(|a: usize| (0..16).map(|b: usize| 2 * c.table[a / 2][b / 2] + ((a % 2) ^ (b % 2))).collect())
            .collect();
        FiniteGroup::new("D4h", table)
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut n = 1;
        while x != 0 {
            x = self.table[x][g];
            n += 1;
        }
        n
    }

    fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.table[x][g];
                if !inside[y] {
                    inside[y] = true;
                    stack.push(y);
                }
            }
        }
        inside
    }

    fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut inside = self.closure(&gens);
        for g in 0..self.order() {
            if !inside[g] {
                gens.push(g);
                inside = self.closure(&gens);
            }
        }
        gens
    }

    /// Verifies that `map` is a bijective homomorphism onto `other`.
    pub fn is_isomorphism(&self, other: &FiniteGroup, map: &[usize]) -> bool {
        let n = self.order();
        if other.order() != n || map.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &m in map {
            if m >= n || seen[m] {
                return false;
            }
            seen[m] = true;
        }
        (0..n).all(|a| (0..n).all(|b| map[self.table[a][b]] == other.table[map[a]][map[b]]))
    }

    /// Finds an isomorphism onto `other`, returned as the image of each element.
    pub fn isomorphism_to(&self, other: &FiniteGroup) -> Result<Vec<usize>> {
        let fail = || Error::NoIsomorphism(other.name.clone());
        if self.order() != other.order() {
            return Err(fail());
        }
        let gens = self.generators();
        let mut images = Vec::with_capacity(gens.len());
        self.search(other, &gens, &mut images).ok_or_else(fail)
    }

    fn search(&self, other: &FiniteGroup, gens: &[usize], images: &mut Vec<usize>) -> Option<Vec<usize>> {
        if images.len() == gens.len() {
            return self.extend(other, gens, images);
        }
        let g = gens[images.len()];
        let ord = self.element_order(g);
        for cand in 1..other.order() {
            if other.element_order(cand) != ord || images.contains(&cand) {
                continue;
            }
            images.push(cand);
            if let Some(m) = self.search(other, gens, images) {
                return Some(m);
            }
            images.pop();
        }
        None
    }

    fn extend(&self, other: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        let n = self.order();
        let mut map = vec![usize::MAX; n];
        map[0] = 0;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for (&g, &img) in gens.iter().zip(images) {
                let y = self.table[x][g];
                let fy = other.table[map[x]][img];
                if map[y] == usize::MAX {
                    map[y] = fy;
                    stack.push(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        self.is_isomorphism(other, &map).then_some(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_groups_are_groups() {
        for g in [FiniteGroup::c4v(), FiniteGroup::d2h(), FiniteGroup::d4h()] {
            let n = g.order();
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        assert_eq!(g.table[g.table[a][b]][c], g.table[a][g.table[b][c]]);
                    }
                }
            }
            assert!(g.isomorphism_to(&g).is_ok());
        }
    }

    #[test]
    fn non_isomorphic_groups_are_rejected() {
        // Z8 is not C4v.
        let z8 = FiniteGroup::new("Z8", (0..8).map(|a| (0..8).map(|b| (a + b) % 8).collect()).collect());
        assert!(z8.isomorphism_to(&FiniteGroup::c4v()).is_err());
        assert!(FiniteGroup::d2h().isomorphism_to(&FiniteGroup::c4v()).is_err());
    }
}

use std::collections::HashMap;

use serde::Serialize;

use crate::kpoint::BlochVector;

/// A truncated set of reciprocal lattice vectors K = (m, n), in units of 2 pi / Lambda.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReciprocalSet {
    truncation: usize,
    k: BlochVector,
    vectors: Vec<[i32; 2]>,
    #[serde(skip)]
    index: HashMap<[i32; 2], usize>,
}

impl ReciprocalSet {
    /// The fixed (2N+1)^2 square |m|, |n| <= N, ordered by m then n.
    pub fn square(truncation: usize) -> Self {
        let n = truncation as i32;
        let vectors = (-n..=n).flat_map(|m| (-n..=n).map(move |l| [m, l])).collect();
        Self::from_vectors(truncation, BlochVector::GAMMA, vectors)
    }

    /// Waves with |(k/2 + K)_x|, |(k/2 + K)_y| <= N + 1/2, ordered by m then n.
    ///
    /// Inside the zone this is the (2N+1)^2 square; on the zone boundary both
    /// members of each tied pair are kept so the set is closed under every
    /// operation of the little group of k.
    pub fn adapted(k: BlochVector, truncation: usize) -> Self {
        let bound = truncation as f64 + 0.5 + 1e-9;
        let [qx, qy] = k.in_reciprocal_units();
        let range = |q: f64| {
            let lo = (-bound - q).ceil() as i32;
            let hi = (bound - q).floor() as i32;
            lo..=hi
        };
        let ys: Vec<i32> = range(qy).collect();
        let vectors = range(qx).flat_map(|m| ys.iter().map(move |&l| [m, l])).collect();
        Self::from_vectors(truncation, k, vectors)
    }

    fn from_vectors(truncation: usize, k: BlochVector, vectors: Vec<[i32; 2]>) -> Self {
        let index = vectors.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        ReciprocalSet { truncation, k, vectors, index }
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// The Bloch vector the set was built for.
    pub fn bloch(&self) -> BlochVector {
        self.k
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[[i32; 2]] {
        &self.vectors
    }

    pub fn get(&self, i: usize) -> [i32; 2] {
        self.vectors[i]
    }

    pub fn index_of(&self, g: [i32; 2]) -> Option<usize> {
        self.index.get(&g).copied()
    }

    /// k + K for entry i, in units of 2 pi / Lambda.
    pub fn wavevector(&self, i: usize) -> [f64; 2] {
        let [qx, qy] = self.k.in_reciprocal_units();
        let [m, n] = self.vectors[i];
        [qx + m as f64, qy + n as f64]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(ReciprocalSet::square(7).len(), 225);
        assert_eq!(ReciprocalSet::adapted(BlochVector::GAMMA, 7).len(), 225);
        assert_eq!(ReciprocalSet::adapted(BlochVector::new(0.3, 0.7), 7).len(), 225);
        assert_eq!(ReciprocalSet::adapted(BlochVector::X, 7).len(), 240);
        assert_eq!(ReciprocalSet::adapted(BlochVector::M, 7).len(), 256);
    }

    #[test]
    fn square_order_is_row_major() {
        let s = ReciprocalSet::square(1);
        assert_eq!(s.get(0), [-1, -1]);
        assert_eq!(s.get(1), [-1, 0]);
        assert_eq!(s.get(4), [0, 0]);
        assert_eq!(s.index_of([1, 1]), Some(8));
    }

    #[test]
    fn adapted_set_is_symmetric_about_minus_k() {
        let s = ReciprocalSet::adapted(BlochVector::M, 3);
        for i in 0..s.len() {
            let q = s.wavevector(i);
            let found = (0..s.len()).any(|j| {
                let p = s.wavevector(j);
                (p[0] + q[0]).abs() < 1e-12 && (p[1] - q[1]).abs() < 1e-12
            });
            assert!(found);
        }
    }
}

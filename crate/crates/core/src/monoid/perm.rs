//! Total permutations of {0..k-1}, used both as permutation types of partial
//! permutations and as elements of the maximal subgroups.

use crate::comb::{factorial, lehmer_rank, lehmer_unrank};

/// A permutation of {0..k-1} in one-line notation: `map[i]` is the image of i.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm {
    map: Vec<u8>,
}

impl Perm {
    pub fn identity(k: usize) -> Perm {
        Perm {
            map: (0..k as u8).collect(),
        }
    }

    pub fn from_one_line(map: Vec<u8>) -> Perm {
        let mut seen = 0u16;
        for &v in &map {
            assert!((v as usize) < map.len() && seen & (1 << v) == 0, "not a permutation");
            seen |= 1 << v;
        }
        Perm { map }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.map[i] as usize
    }

    pub fn one_line(&self) -> &[u8] {
        &self.map
    }

    /// self after other: (self * other)(i) = self(other(i)).
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.len(), other.len());
        Perm {
            map: other.map.iter().map(|&i| self.map[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut map = vec![0u8; self.len()];
        for (i, &v) in self.map.iter().enumerate() {
            map[v as usize] = i as u8;
        }
        Perm { map }
    }

    /// The adjacent transposition (i, i+1), 0-based.
    pub fn adjacent(k: usize, i: usize) -> Perm {
        let mut p = Perm::identity(k);
        p.map.swap(i, i + 1);
        p
    }

    /// The cycle (i, i+1, ..., k-1) sending k-1 to i; coset representative of
    /// the subgroup fixing the last point. `i = k-1` gives the identity.
    pub fn coset_cycle(k: usize, i: usize) -> Perm {
        let mut map: Vec<u8> = (0..k as u8).collect();
        for j in i..k - 1 {
            map[j] = j as u8 + 1;
        }
        map[k - 1] = i as u8;
        Perm { map }
    }

    pub fn rank(&self) -> usize {
        lehmer_rank(&self.map)
    }

    pub fn unrank(k: usize, rank: usize) -> Perm {
        Perm {
            map: lehmer_unrank(k, rank),
        }
    }

    pub fn count(k: usize) -> usize {
        factorial(k) as usize
    }

    /// Factor into adjacent transpositions a_1..a_m (0-based positions) so
    /// that self = adjacent(a_1) * adjacent(a_2) * ... * adjacent(a_m).
    pub fn adjacent_factorization(&self) -> Vec<usize> {
        // Bubble-sort the one-line form; each position swap right-multiplies
        // by an adjacent transposition, so the factorization is the reversed
        // swap sequence.
        let mut v = self.map.clone();
        let mut swaps = Vec::new();
        let k = v.len();
        loop {
            let mut done = true;
            for j in 0..k.saturating_sub(1) {
                if v[j] > v[j + 1] {
                    v.swap(j, j + 1);
                    swaps.push(j);
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        swaps.reverse();
        swaps
    }
}

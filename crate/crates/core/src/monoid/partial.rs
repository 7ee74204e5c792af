//! Partial permutations of {1..n}: the elements of the rook monoid R_n.

use std::fmt;

use crate::comb::{complement_list, member_list, MAX_N};
use crate::error::{Error, Result};
use crate::monoid::perm::Perm;

const NONE: u8 = u8::MAX;

/// An injective partial map on {0..n-1} (displayed 1-based). Stored as a
/// fixed-length image array with a sentinel for "undefined" plus cached
/// domain/range bitmasks, so complement probes are O(1) per bit.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PartialPerm {
    n: u8,
    img: [u8; MAX_N],
    dom_mask: u16,
    ran_mask: u16,
}

impl PartialPerm {
    /// The nowhere-defined map (the zero of R_n).
    pub fn empty(n: usize) -> PartialPerm {
        assert!(n <= MAX_N);
        PartialPerm {
            n: n as u8,
            img: [NONE; MAX_N],
            dom_mask: 0,
            ran_mask: 0,
        }
    }

    /// The identity of R_n.
    pub fn identity(n: usize) -> PartialPerm {
        Self::partial_identity(n, if n == 16 { !0 } else { (1u16 << n) - 1 })
    }

    /// The restriction of the identity to the points of `mask`.
    pub fn partial_identity(n: usize, mask: u16) -> PartialPerm {
        let mut p = Self::empty(n);
        for b in member_list(mask) {
            p.img[b as usize] = b;
        }
        p.dom_mask = mask;
        p.ran_mask = mask;
        p
    }

    /// Build from (point, image) pairs, 0-based.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<PartialPerm> {
        let mut p = Self::empty(n);
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(Error::InvalidElement(format!(
                    "point {} -> {} outside 1..={}",
                    x + 1,
                    y + 1,
                    n
                )));
            }
            if p.dom_mask & (1 << x) != 0 {
                return Err(Error::InvalidElement(format!("point {} mapped twice", x + 1)));
            }
            if p.ran_mask & (1 << y) != 0 {
                return Err(Error::InvalidElement(format!(
                    "image {} hit twice (not injective)",
                    y + 1
                )));
            }
            p.img[x] = y as u8;
            p.dom_mask |= 1 << x;
            p.ran_mask |= 1 << y;
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn rank(&self) -> usize {
        self.dom_mask.count_ones() as usize
    }

    pub fn dom_mask(&self) -> u16 {
        self.dom_mask
    }

    pub fn ran_mask(&self) -> u16 {
        self.ran_mask
    }

    #[inline]
    pub fn apply(&self, x: usize) -> Option<usize> {
        let y = self.img[x];
        (y != NONE).then_some(y as usize)
    }

    pub fn is_idempotent(&self) -> bool {
        self.dom_mask == self.ran_mask && member_list(self.dom_mask).iter().all(|&b| self.img[b as usize] == b)
    }

    /// self after other, defined where the composite is defined.
    pub fn compose(&self, other: &PartialPerm) -> Result<PartialPerm> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n(), other.n()));
        }
        let mut out = Self::empty(self.n());
        for x in member_list(other.dom_mask) {
            let mid = other.img[x as usize];
            let y = self.img[mid as usize];
            if y != NONE {
                out.img[x as usize] = y;
                out.dom_mask |= 1 << x;
                out.ran_mask |= 1 << y;
            }
        }
        Ok(out)
    }

    /// The unique semigroup inverse: as a rook matrix, the transpose.
    pub fn inverse(&self) -> PartialPerm {
        let mut out = Self::empty(self.n());
        for x in member_list(self.dom_mask) {
            let y = self.img[x as usize];
            out.img[y as usize] = x;
        }
        out.dom_mask = self.ran_mask;
        out.ran_mask = self.dom_mask;
        out
    }

    /// Natural partial order: s <= t iff t extends s as a partial function.
    pub fn leq(&self, t: &PartialPerm) -> Result<bool> {
        if self.n != t.n {
            return Err(Error::DimensionMismatch(self.n(), t.n()));
        }
        Ok(self.leq_unchecked(t))
    }

    #[inline]
    pub(crate) fn leq_unchecked(&self, t: &PartialPerm) -> bool {
        if self.dom_mask & !t.dom_mask != 0 {
            return false;
        }
        member_list(self.dom_mask)
            .iter()
            .all(|&b| self.img[b as usize] == t.img[b as usize])
    }

    /// Mobius function of the interval [self, t]: (-1)^(rk t - rk self).
    pub fn mobius(&self, t: &PartialPerm) -> Result<i64> {
        if !self.leq(t)? {
            return Err(Error::domain("mobius(s, t) requires s <= t"));
        }
        Ok(if (t.rank() - self.rank()) % 2 == 0 { 1 } else { -1 })
    }

    /// The permutation type: arrows from the sorted domain to the sorted
    /// range, as a permutation of {0..rk-1}. The empty permutation at rank 0.
    pub fn perm_type(&self) -> Perm {
        let dom = member_list(self.dom_mask);
        let ran = member_list(self.ran_mask);
        let map = dom
            .iter()
            .map(|&x| ran.iter().position(|&y| y == self.img[x as usize]).unwrap() as u8)
            .collect();
        Perm::from_one_line(map)
    }

    /// The unique order-preserving bijection {1..|A|} -> A, as an element of
    /// R_n (domain {0..|A|-1}, range A).
    pub fn p_map(n: usize, mask: u16) -> PartialPerm {
        let mut p = Self::empty(n);
        for (i, b) in member_list(mask).into_iter().enumerate() {
            p.img[i] = b;
        }
        p.dom_mask = if mask == 0 { 0 } else { (1u16 << mask.count_ones()) - 1 };
        p.ran_mask = mask;
        p
    }

    /// Points outside the domain, ascending (the d_i of the zeta recurrence).
    pub fn dom_complement(&self) -> Vec<u8> {
        complement_list(self.n(), self.dom_mask)
    }

    /// Points outside the range, ascending (the r_i of the zeta recurrence).
    pub fn ran_complement(&self) -> Vec<u8> {
        complement_list(self.n(), self.ran_mask)
    }

    /// The extension of self by the arrow d -> r (both currently unused).
    pub fn extend(&self, d: usize, r: usize) -> PartialPerm {
        debug_assert!(self.dom_mask & (1 << d) == 0 && self.ran_mask & (1 << r) == 0);
        let mut out = *self;
        out.img[d] = r as u8;
        out.dom_mask |= 1 << d;
        out.ran_mask |= 1 << r;
        out
    }

    /// Parse the textual form "a1,a2,...,an" with "-" for undefined, 1-based.
    pub fn parse(n: usize, text: &str) -> Result<PartialPerm> {
        let fields: Vec<&str> = text.split(',').map(str::trim).collect();
        if fields.len() != n {
            return Err(Error::Parse(format!(
                "expected {} comma-separated entries, found {}",
                n,
                fields.len()
            )));
        }
        let mut pairs = Vec::new();
        for (x, f) in fields.iter().enumerate() {
            if *f == "-" {
                continue;
            }
            let y: usize = f
                .parse()
                .map_err(|_| Error::Parse(format!("bad image entry {f:?}")))?;
            if y == 0 || y > n {
                return Err(Error::Parse(format!("image {y} outside 1..={n}")));
            }
            pairs.push((x, y - 1));
        }
        Self::from_pairs(n, &pairs)
    }
}

impl fmt::Display for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in 0..self.n() {
            if x > 0 {
                write!(f, ",")?;
            }
            match self.apply(x) {
                Some(y) => write!(f, "{}", y + 1)?,
                None => write!(f, "-")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartialPerm({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(n: usize, pairs: &[(usize, usize)]) -> PartialPerm {
        PartialPerm::from_pairs(n, pairs).unwrap()
    }

    #[test]
    fn compose_identity_is_neutral() {
        let id = PartialPerm::identity(4);
        let b = pp(4, &[(0, 3), (2, 1)]);
        assert_eq!(id.compose(&b).unwrap(), b);
        assert_eq!(b.compose(&id).unwrap(), b);
    }

    #[test]
    fn compose_worked_example() {
        // pi = (1->4, 2->3), sigma = (1->2, 3->1): pi o sigma = (1->3, 3->4)
        let pi = pp(4, &[(0, 3), (1, 2)]);
        let sigma = pp(4, &[(0, 1), (2, 0)]);
        assert_eq!(pi.compose(&sigma).unwrap(), pp(4, &[(0, 2), (2, 3)]));
    }

    #[test]
    fn compose_dimension_error() {
        let a = PartialPerm::identity(3);
        let b = PartialPerm::identity(4);
        assert!(a.compose(&b).is_err());
    }

    #[test]
    fn inverse_is_transpose() {
        // sigma = (2->1, 4->4) has inverse (1->2, 4->4)
        let s = pp(4, &[(1, 0), (3, 3)]);
        assert_eq!(s.inverse(), pp(4, &[(0, 1), (3, 3)]));
        let z = PartialPerm::empty(3);
        assert_eq!(z.inverse(), z);
    }

    #[test]
    fn leq_examples() {
        let s = pp(4, &[(1, 0)]);
        let t = pp(4, &[(1, 0), (3, 3)]);
        assert!(s.leq(&t).unwrap());
        assert!(!t.leq(&s).unwrap());
        assert!(PartialPerm::empty(4).leq(&t).unwrap());
        // same domain, different image
        let u = pp(4, &[(1, 2), (3, 3)]);
        assert!(!s.leq(&u).unwrap());
    }

    #[test]
    fn mobius_examples() {
        let id3 = PartialPerm::identity(3);
        let empty = PartialPerm::empty(3);
        assert_eq!(id3.mobius(&id3).unwrap(), 1);
        assert_eq!(empty.mobius(&id3).unwrap(), -1);
        let s = pp(3, &[(0, 1)]);
        assert!(id3.mobius(&s).is_err());
    }

    #[test]
    fn perm_type_worked_example() {
        // s = (1->4, 3->1, 4->2): perm(s) = (1->3, 2->1, 3->2)
        let s = pp(4, &[(0, 3), (2, 0), (3, 1)]);
        assert_eq!(s.perm_type(), Perm::from_one_line(vec![2, 0, 1]));
        // partial identities have identity type
        let e = PartialPerm::partial_identity(5, 0b10110);
        assert_eq!(e.perm_type(), Perm::identity(3));
        assert_eq!(PartialPerm::empty(4).perm_type(), Perm::identity(0));
    }

    #[test]
    fn perm_type_equals_explicit_composition() {
        // perm(s) = p_ran^-1 o s o p_dom, checked explicitly
        for n in 1..=5 {
            for trial in 0..40usize {
                let mut pairs = Vec::new();
                let mut used_d = 0u16;
                let mut used_r = 0u16;
                let mut x = trial.wrapping_mul(2654435761);
                for _ in 0..n {
                    x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    let d = (x >> 33) % n;
                    let r = (x >> 13) % n;
                    if used_d & (1 << d) == 0 && used_r & (1 << r) == 0 {
                        pairs.push((d, r));
                        used_d |= 1 << d;
                        used_r |= 1 << r;
                    }
                }
                let s = pp(n, &pairs);
                let k = s.rank();
                let p_dom = PartialPerm::p_map(n, s.dom_mask());
                let p_ran = PartialPerm::p_map(n, s.ran_mask());
                let typ = p_ran.inverse().compose(&s.compose(&p_dom).unwrap()).unwrap();
                let expected = s.perm_type();
                assert_eq!(typ.dom_mask(), if k == 0 { 0 } else { (1 << k) - 1 });
                for i in 0..k {
                    assert_eq!(typ.apply(i).unwrap(), expected.apply(i));
                }
            }
        }
    }

    #[test]
    fn p_map_examples() {
        // A = {2, 4} in 1-based text = {1, 3} 0-based
        let p = PartialPerm::p_map(4, 0b1010);
        assert_eq!(p, pp(4, &[(0, 1), (1, 3)]));
        // A = {1..k} gives the partial identity e_k
        let e2 = PartialPerm::p_map(4, 0b0011);
        assert_eq!(e2, PartialPerm::partial_identity(4, 0b0011));
        assert!(p.perm_type() == Perm::identity(2));
    }

    #[test]
    fn parse_and_display_round_trip() {
        let s = PartialPerm::parse(7, "2,-,5,-,-,-,3").unwrap();
        assert_eq!(s, pp(7, &[(0, 1), (2, 4), (6, 2)]));
        assert_eq!(s.to_string(), "2,-,5,-,-,-,3");
        assert!(PartialPerm::parse(3, "1,1,2").is_err());
        assert!(PartialPerm::parse(3, "1,2").is_err());
        assert!(PartialPerm::parse(3, "4,-,-").is_err());
    }
}

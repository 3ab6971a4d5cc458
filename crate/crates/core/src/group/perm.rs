//! Permutations on the points `{1..k}`, stored 0-based internally.

use std::fmt;

use crate::arith::lcm;

use super::GroupError;

/// A permutation of `{1..k}` as the image array of `0..k-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Self { images: (0..k as u32).collect() }
    }

    /// Builds from 0-based images, validating bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self, GroupError> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &img in &images {
            let img = img as usize;
            if img >= k || seen[img] {
                return Err(GroupError::InvalidPermutation(format!(
                    "images {:?} are not a bijection on 1..{k}",
                    images.iter().map(|&i| i + 1).collect::<Vec<_>>()
                )));
            }
            seen[img] = true;
        }
        Ok(Self { images })
    }

    /// Builds from disjoint-or-not cycles in 1-based points; repeated points
    /// within the cycle list are rejected.
    pub fn from_cycles(k: usize, cycles: &[Vec<u32>]) -> Result<Self, GroupError> {
        let mut images: Vec<u32> = (0..k as u32).collect();
        let mut touched = vec![false; k];
        for cycle in cycles {
            for window in 0..cycle.len() {
                let from = cycle[window];
                let to = cycle[(window + 1) % cycle.len()];
                if from < 1 || from as usize > k {
                    return Err(GroupError::InvalidPermutation(format!(
                        "point {from} outside 1..{k}"
                    )));
                }
                if touched[(from - 1) as usize] {
                    return Err(GroupError::InvalidPermutation(format!(
                        "point {from} appears twice in cycle list"
                    )));
                }
                touched[(from - 1) as usize] = true;
                images[(from - 1) as usize] = to - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    /// Function composition: `(self.compose(other)).apply(x) == self.apply(other.apply(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y as usize] = x as u32;
        }
        Permutation { images }
    }

    /// Cycle lengths including fixed points, descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let k = self.images.len();
        let mut seen = vec![false; k];
        let mut lengths = Vec::new();
        for start in 0..k {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                at = self.images[at] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn order(&self) -> u64 {
        self.cycle_type().into_iter().fold(1u64, |acc, len| lcm(acc, len as u64))
    }

    /// Even permutations have an even number of even-length cycles.
    pub fn is_even(&self) -> bool {
        self.cycle_type().iter().filter(|&&len| len % 2 == 0).count() % 2 == 0
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation on 1-based points, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.images.len();
        let mut seen = vec![false; k];
        let mut wrote = false;
        for start in 0..k {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut at = start;
            let mut first = true;
            while !seen[at] {
                seen[at] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", at + 1)?;
                first = false;
                at = self.images[at] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_parse_and_order() {
        let p = Permutation::from_cycles(5, &[vec![1, 2, 3], vec![4, 5]]).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.cycle_type(), vec![3, 2]);
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        assert!(!p.is_even());
    }

    #[test]
    fn compose_against_direct_application() {
        let a = Permutation::from_cycles(4, &[vec![1, 2]]).unwrap();
        let b = Permutation::from_cycles(4, &[vec![2, 3, 4]]).unwrap();
        let ab = a.compose(&b);
        for x in 0..4 {
            assert_eq!(ab.apply(x), a.apply(b.apply(x)));
        }
        assert_eq!(a.compose(&a.inverse()), Permutation::identity(4));
    }

    #[test]
    fn invalid_inputs() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![1, 4]]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![1, 2], vec![2, 3]]).is_err());
    }

    #[test]
    fn parity() {
        assert!(Permutation::identity(4).is_even());
        assert!(!Permutation::from_cycles(4, &[vec![1, 2]]).unwrap().is_even());
        assert!(Permutation::from_cycles(4, &[vec![1, 2, 3]]).unwrap().is_even());
    }
}

//! Problem data: the system type, degree vectors and permutations of the
//! variable groups.

use std::fmt;
use std::ops::Deref;

use crate::error::Error;

/// Type `(l_1, ..., l_r; d_1, ..., d_r)` of an unmixed multihomogeneous system.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SystemData {
    l: Vec<u32>,
    d: Vec<u32>,
    n: u32,
}

impl SystemData {
    pub fn new(l: Vec<u32>, d: Vec<u32>) -> Result<Self, Error> {
        if l.is_empty() {
            return Err(Error::InvalidSystem("at least one variable group is required".into()));
        }
        if l.len() != d.len() {
            return Err(Error::InvalidSystem(format!(
                "{} projective dimensions but {} degrees",
                l.len(),
                d.len()
            )));
        }
        if l.iter().chain(&d).any(|&v| v == 0) {
            return Err(Error::InvalidSystem("dimensions and degrees must be positive".into()));
        }
        let n = l.iter().sum();
        Ok(SystemData { l, d, n })
    }

    /// Number of variable groups.
    pub fn r(&self) -> usize {
        self.l.len()
    }

    pub fn l(&self) -> &[u32] {
        &self.l
    }

    pub fn d(&self) -> &[u32] {
        &self.d
    }

    /// Total number of affine variables, `l_1 + ... + l_r`.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Flat index of the first affine variable of group `k`.
    pub fn var_offset(&self, k: usize) -> usize {
        self.l[..k].iter().map(|&v| v as usize).sum()
    }

    /// Group of the affine variable with flat index `var`.
    pub fn group_of(&self, var: usize) -> usize {
        group_of(&self.l, var)
    }

    pub fn check_vector(&self, m: &[i64]) -> Result<(), Error> {
        if m.len() != self.r() {
            return Err(Error::LengthMismatch {
                expected: self.r(),
                got: m.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for SystemData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({}; {})", join(&self.l), join(&self.d))
    }
}

fn group_of(l: &[u32], var: usize) -> usize {
    let mut acc = 0usize;
    for (k, &lk) in l.iter().enumerate() {
        acc += lk as usize;
        if var < acc {
            return k;
        }
    }
    panic!("variable index {var} out of range for groups {l:?}")
}

/// Name of affine variable `var` as `{prefix}{group}_{slot}`, both 1-based.
pub fn affine_var_name(prefix: &str, l: &[u32], var: usize) -> String {
    let k = group_of(l, var);
    let slot = var - l[..k].iter().map(|&v| v as usize).sum::<usize>();
    format!("{prefix}{}_{}", k + 1, slot + 1)
}

/// Integer vector `m` indexing a Weyman complex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeVector(Vec<i64>);

impl DegreeVector {
    pub fn new(m: Vec<i64>) -> Self {
        DegreeVector(m)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &DegreeVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

impl Deref for DegreeVector {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for DegreeVector {
    fn from(v: Vec<i64>) -> Self {
        DegreeVector(v)
    }
}

impl<const N: usize> From<[i64; N]> for DegreeVector {
    fn from(v: [i64; N]) -> Self {
        DegreeVector(v.to_vec())
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Permutation of the variable groups, stored 0-based: `images[k]` is the
/// position assigned to group `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

/// Permutation enumeration guard: `r!` grows too fast beyond this.
pub const MAX_GROUPS_FOR_PERMUTATIONS: usize = 8;

impl Permutation {
    pub fn identity(r: usize) -> Self {
        Permutation {
            images: (0..r).collect(),
        }
    }

    /// Builds from 1-based one-line notation, e.g. `[2, 1, 3]`.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self, Error> {
        let r = one_line.len();
        let mut seen = vec![false; r];
        for &v in one_line {
            if v == 0 || v > r || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{one_line:?} is not a permutation of 1..{r}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: one_line.iter().map(|v| v - 1).collect(),
        })
    }

    /// All permutations of `r` elements in lexicographic one-line order.
    pub fn all(r: usize) -> Result<Vec<Permutation>, Error> {
        if r > MAX_GROUPS_FOR_PERMUTATIONS {
            return Err(Error::TooManyGroups { r });
        }
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..r).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..r).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..r).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        Ok(out)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 0-based image of group `k`.
    pub fn image(&self, k: usize) -> usize {
        self.images[k]
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (k, &p) in self.images.iter().enumerate() {
            inv[p] = k;
        }
        Permutation { images: inv }
    }

    /// `k -> r + 1 - pi(k)`, i.e. composition with the reversal.
    pub fn dual(&self) -> Permutation {
        let r = self.images.len();
        Permutation {
            images: self.images.iter().map(|&p| r - 1 - p).collect(),
        }
    }

    /// Groups listed by increasing position, i.e. the one-line notation of
    /// the inverse.
    pub fn order(&self) -> Vec<usize> {
        self.inverse().images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn system_validation() {
        assert!(SystemData::new(vec![], vec![]).is_err());
        assert!(SystemData::new(vec![1, 2], vec![2]).is_err());
        assert!(SystemData::new(vec![1, 0], vec![2, 2]).is_err());
        let sys = SystemData::new(vec![2, 1, 1], vec![2, 2, 2]).unwrap();
        assert_eq!((sys.r(), sys.n()), (3, 4));
        assert_eq!(sys.var_offset(2), 3);
        assert_eq!(sys.group_of(1), 0);
        assert_eq!(sys.group_of(3), 2);
        assert_eq!(sys.to_string(), "(2,1,1; 2,2,2)");
    }

    #[test]
    fn variable_names() {
        let l = [1, 2];
        let names: Vec<String> = (0..3).map(|i| affine_var_name("x", &l, i)).collect();
        assert_eq!(names, ["x1_1", "x2_1", "x2_2"]);
    }

    #[test]
    fn permutations_in_lexicographic_order() {
        let all = Permutation::all(3).unwrap();
        let lines: Vec<Vec<usize>> = all.iter().map(Permutation::one_line).collect();
        assert_eq!(
            lines,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1]
            ]
        );
        assert_eq!(Permutation::all(1).unwrap().len(), 1);
        assert!(matches!(Permutation::all(9), Err(Error::TooManyGroups { r: 9 })));
    }

    #[test]
    fn dual_permutation() {
        assert_eq!(Permutation::identity(2).dual(), Permutation::from_one_line(&[2, 1]).unwrap());
        let pi = Permutation::from_one_line(&[2, 1, 3]).unwrap();
        assert_eq!(pi.dual().one_line(), vec![2, 3, 1]);
        for pi in Permutation::all(4).unwrap() {
            assert_eq!(pi.dual().dual(), pi);
            assert_eq!(pi.inverse().inverse(), pi);
        }
    }

    #[test]
    fn invalid_one_line() {
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
        assert!(Permutation::from_one_line(&[3, 1]).is_err());
    }
}

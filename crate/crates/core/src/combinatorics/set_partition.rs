use std::fmt;

use serde::Serialize;

use super::Permutation;
use crate::error::{Error, Result};

/// A set partition of `{1..r}`. Blocks are sorted internally and ordered by
/// their smallest element, so structural equality is set-partition equality.
///
/// A set partition also stands for its Young subgroup: the permutations
/// mapping every block to itself.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidArgument("empty block".into()));
            }
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.iter().enumerate().any(|(i, &v)| v != i + 1) {
            return Err(Error::InvalidArgument(format!(
                "blocks {blocks:?} do not partition 1..={}",
                all.len()
            )));
        }
        Ok(SetPartition { blocks })
    }

    /// The partition with a single block `{1..r}` (the whole symmetric group).
    pub fn coarsest(r: usize) -> Self {
        SetPartition {
            blocks: if r == 0 { vec![] } else { vec![(1..=r).collect()] },
        }
    }

    /// All singletons (the trivial subgroup).
    pub fn finest(r: usize) -> Self {
        SetPartition {
            blocks: (1..=r).map(|i| vec![i]).collect(),
        }
    }

    /// Consecutive blocks of the given sizes: `{1..c_1}, {c_1+1..c_1+c_2}, ...`.
    pub fn consecutive(sizes: &[usize]) -> Result<Self> {
        let mut blocks = Vec::with_capacity(sizes.len());
        let mut next = 1;
        for &s in sizes {
            if s == 0 {
                return Err(Error::InvalidArgument("zero block size".into()));
            }
            blocks.push((next..next + s).collect());
            next += s;
        }
        Ok(SetPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// The composition of block sizes, in block order.
    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// Size of the ground set.
    pub fn ground_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Index of the block containing `i` (1-based element).
    pub fn block_of(&self, i: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&i).is_ok())
    }

    /// Order of the Young subgroup, `Π |B|!`.
    pub fn young_order(&self) -> u64 {
        self.blocks
            .iter()
            .map(|b| (1..=b.len() as u64).product::<u64>())
            .product()
    }

    /// Whether `p` lies in the Young subgroup (maps each block onto itself).
    pub fn young_contains(&self, p: &Permutation) -> bool {
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&i| b.binary_search(&p.apply(i)).is_ok()))
    }

    /// Adjacent transpositions inside each block; they generate the Young subgroup.
    pub fn young_generators(&self) -> Vec<Permutation> {
        let r = self.ground_size();
        self.blocks
            .iter()
            .flat_map(|b| b.windows(2).map(move |w| Permutation::transposition(r, w[0], w[1])))
            .collect()
    }

    /// Every element of the Young subgroup, in lexicographic order.
    pub fn young_elements(&self) -> Vec<Permutation> {
        let r = self.ground_size();
        let mut out = vec![Permutation::identity(r)];
        for block in &self.blocks {
            let local = Permutation::all(block.len());
            let mut next = Vec::with_capacity(out.len() * local.len());
            for base in &out {
                for sigma in &local {
                    let mut one_line = base.one_line().to_vec();
                    for (k, &i) in block.iter().enumerate() {
                        one_line[i - 1] = block[sigma.apply(k + 1) - 1];
                    }
                    next.push(Permutation::new(one_line).expect("block permutation"));
                }
            }
            out = next;
        }
        out.sort();
        out
    }

    /// Image of the partition under `q`: blocks `q(B_1), q(B_2), ...`.
    pub fn permuted(&self, q: &Permutation) -> SetPartition {
        SetPartition::new(
            self.blocks
                .iter()
                .map(|b| b.iter().map(|&i| q.apply(i)).collect())
                .collect(),
        )
        .expect("image of a set partition")
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (i, v) in b.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetPartition({self})")
    }
}

/// Level sets of `values` viewed as a map on `{1..r}`.
pub fn multiplicity_partition<T: PartialEq>(values: &[T]) -> SetPartition {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut reps: Vec<&T> = Vec::new();
    for (i, v) in values.iter().enumerate() {
        match reps.iter().position(|&r| r == v) {
            Some(k) => blocks[k].push(i + 1),
            None => {
                reps.push(v);
                blocks.push(vec![i + 1]);
            }
        }
    }
    // first occurrences come in increasing order, so blocks are already canonical
    SetPartition { blocks }
}

/// The adjacency function: starts at 1 and increments whenever two
/// consecutive values differ.
pub fn adjacency<T: PartialEq>(values: &[T]) -> Vec<usize> {
    let mut out = Vec::with_capacity(values.len());
    let mut current = 1;
    for (i, v) in values.iter().enumerate() {
        if i > 0 && *v != values[i - 1] {
            current += 1;
        }
        out.push(current);
    }
    out
}

/// Common refinement of two set partitions of the same ground set; its
/// Young subgroup is the intersection of the two Young subgroups.
pub fn young_intersection(a: &SetPartition, b: &SetPartition) -> Result<SetPartition> {
    let r = a.ground_size();
    if b.ground_size() != r {
        return Err(Error::InvalidArgument(format!(
            "ground sets differ: {r} vs {}",
            b.ground_size()
        )));
    }
    let labels: Vec<(usize, usize)> = (1..=r)
        .map(|i| (a.block_of(i).unwrap(), b.block_of(i).unwrap()))
        .collect();
    Ok(multiplicity_partition(&labels))
}

#[cfg(test)]
mod tests {
    use num_rational::Rational64;

    use super::*;

    fn sp(blocks: &[&[usize]]) -> SetPartition {
        SetPartition::new(blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    fn q(a: i64, b: i64) -> Rational64 {
        Rational64::new(a, b)
    }

    #[test]
    fn multiplicity_partition_examples() {
        assert_eq!(multiplicity_partition(&[2, 1, 1]), sp(&[&[1], &[2, 3]]));
        assert_eq!(multiplicity_partition(&[7, 7, 7]), sp(&[&[1, 2, 3]]));
        assert_eq!(
            multiplicity_partition(&[q(0, 1), q(1, 2), q(0, 1)]),
            sp(&[&[1, 3], &[2]])
        );
    }

    #[test]
    fn adjacency_examples() {
        assert_eq!(adjacency(&[q(1, 2), q(0, 1), q(0, 1)]), vec![1, 2, 2]);
        assert_eq!(adjacency(&[5, 5, 5, 5]), vec![1, 1, 1, 1]);
        assert_eq!(adjacency(&[q(0, 1), q(1, 2), q(0, 1)]), vec![1, 2, 3]);
    }

    #[test]
    fn young_intersection_examples() {
        let a = sp(&[&[1], &[2, 3]]);
        assert_eq!(
            young_intersection(&a, &SetPartition::coarsest(3)).unwrap(),
            a
        );
        let x = sp(&[&[1, 2], &[3, 4]]);
        let y = sp(&[&[1, 3], &[2, 4]]);
        assert_eq!(young_intersection(&x, &y).unwrap(), SetPartition::finest(4));
        assert_eq!(young_intersection(&x, &x).unwrap(), x);
        assert!(young_intersection(&x, &SetPartition::finest(3)).is_err());
    }

    #[test]
    fn young_subgroup_elements_match_order_and_membership() {
        let p = sp(&[&[1, 4], &[2, 3, 5]]);
        let elems = p.young_elements();
        assert_eq!(elems.len() as u64, p.young_order());
        assert_eq!(p.young_order(), 12);
        let brute: Vec<_> = Permutation::all(5)
            .into_iter()
            .filter(|g| p.young_contains(g))
            .collect();
        assert_eq!(elems, brute);
    }

    #[test]
    fn young_intersection_is_subgroup_intersection() {
        let x = sp(&[&[1, 2, 3], &[4]]);
        let y = sp(&[&[1, 4], &[2, 3]]);
        let z = young_intersection(&x, &y).unwrap();
        for g in Permutation::all(4) {
            assert_eq!(
                z.young_contains(&g),
                x.young_contains(&g) && y.young_contains(&g)
            );
        }
    }

    #[test]
    fn rejects_non_partitions() {
        assert!(SetPartition::new(vec![vec![1], vec![1, 2]]).is_err());
        assert!(SetPartition::new(vec![vec![1], vec![3]]).is_err());
        assert!(SetPartition::new(vec![vec![]]).is_err());
    }
}

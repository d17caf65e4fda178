//! Equivalence relations on `{0, .., n-1}` in canonical least-representative
//! form.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An equivalence relation on `{0, .., n-1}`.
///
/// `reps[i]` is the least element of the block containing `i`, so two
/// partitions are equal exactly when their arrays are equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    reps: Vec<usize>,
}

impl Partition {
    /// The equality relation (every block a singleton).
    pub fn zero(n: usize) -> Self {
        Partition {
            reps: (0..n).collect(),
        }
    }

    /// The total relation (a single block).
    pub fn one(n: usize) -> Self {
        Partition { reps: vec![0; n] }
    }

    /// Builds a partition from a representative array, validating that it is
    /// in canonical form.
    pub fn from_reps(reps: Vec<usize>) -> Result<Self> {
        for (i, &r) in reps.iter().enumerate() {
            if r > i || reps[r] != r {
                return Err(Error::Validation(format!(
                    "representative array is not canonical at index {i}"
                )));
            }
        }
        Ok(Partition { reps })
    }

    /// Builds a partition from a block labelling: `i` and `j` are related iff
    /// `labels[i] == labels[j]`.
    pub fn from_labels<T: Eq + std::hash::Hash>(labels: &[T]) -> Self {
        let mut first: HashMap<&T, usize> = HashMap::with_capacity(labels.len());
        let reps = labels
            .iter()
            .enumerate()
            .map(|(i, l)| *first.entry(l).or_insert(i))
            .collect();
        Partition { reps }
    }

    /// Builds a partition from explicit blocks. Elements not mentioned form
    /// singleton blocks.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut uf = UnionFind::new(n);
        let mut seen = vec![false; n];
        for block in blocks {
            for &x in block {
                if x >= n {
                    return Err(Error::arg(format!("element {x} out of range for size {n}")));
                }
                if seen[x] {
                    return Err(Error::arg(format!("element {x} occurs in two blocks")));
                }
                seen[x] = true;
            }
            for w in block.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        Ok(uf.into_partition())
    }

    pub fn size(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    #[inline]
    pub fn rep(&self, x: usize) -> usize {
        self.reps[x]
    }

    #[inline]
    pub fn related(&self, a: usize, b: usize) -> bool {
        self.reps[a] == self.reps[b]
    }

    pub fn is_zero(&self) -> bool {
        self.reps.iter().enumerate().all(|(i, &r)| i == r)
    }

    pub fn is_one(&self) -> bool {
        self.reps.iter().all(|&r| r == 0)
    }

    pub fn block_count(&self) -> usize {
        self.reps.iter().enumerate().filter(|&(i, &r)| i == r).count()
    }

    /// Blocks sorted by least element, each block sorted ascending.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut index = vec![usize::MAX; self.size()];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, &r) in self.reps.iter().enumerate() {
            if index[r] == usize::MAX {
                index[r] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[index[r]].push(i);
        }
        blocks
    }

    /// Number of ordered pairs in the relation.
    pub fn pair_count(&self) -> usize {
        let mut counts = vec![0usize; self.size()];
        for &r in &self.reps {
            counts[r] += 1;
        }
        counts.iter().map(|c| c * c).sum()
    }

    /// All ordered pairs `(a, b)` with `a` related to `b`, in lexicographic
    /// order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let blocks = self.blocks();
        let mut block_of = vec![0; self.size()];
        for (bi, b) in blocks.iter().enumerate() {
            for &x in b {
                block_of[x] = bi;
            }
        }
        let mut out = Vec::with_capacity(self.pair_count());
        for a in 0..self.size() {
            for &b in &blocks[block_of[a]] {
                out.push((a, b));
            }
        }
        out
    }

    /// `self <= other` as relations.
    pub fn leq(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.size(), other.size());
        self.reps
            .iter()
            .enumerate()
            .all(|(i, &r)| other.reps[i] == other.reps[r])
    }

    pub fn lt(&self, other: &Partition) -> bool {
        self != other && self.leq(other)
    }

    /// Intersection of relations.
    pub fn meet(&self, other: &Partition) -> Result<Partition> {
        self.check_size(other)?;
        Ok(self.meet_unchecked(other))
    }

    pub(crate) fn meet_unchecked(&self, other: &Partition) -> Partition {
        let labels: Vec<(usize, usize)> = self
            .reps
            .iter()
            .zip(&other.reps)
            .map(|(&a, &b)| (a, b))
            .collect();
        Partition::from_labels(&labels)
    }

    /// Transitive closure of the union.
    pub fn join(&self, other: &Partition) -> Result<Partition> {
        self.check_size(other)?;
        Ok(self.join_unchecked(other))
    }

    pub(crate) fn join_unchecked(&self, other: &Partition) -> Partition {
        let mut uf = UnionFind::new(self.size());
        for i in 0..self.size() {
            uf.union(i, self.reps[i]);
            uf.union(i, other.reps[i]);
        }
        uf.into_partition()
    }

    fn check_size(&self, other: &Partition) -> Result<()> {
        if self.size() != other.size() {
            return Err(Error::arg(format!(
                "partition sizes differ ({} vs {})",
                self.size(),
                other.size()
            )));
        }
        Ok(())
    }

    /// Restriction to the elements of `subset`, re-indexed by position in
    /// `subset`.
    pub fn restrict(&self, subset: &[usize]) -> Partition {
        let labels: Vec<usize> = subset.iter().map(|&x| self.reps[x]).collect();
        Partition::from_labels(&labels)
    }

    /// Image of this partition under a surjective map onto `{0, .., m-1}`.
    /// When `self` contains the kernel of `map` this is the quotient
    /// partition `self / ker(map)`.
    pub fn image(&self, map: &[usize], m: usize) -> Partition {
        let mut uf = UnionFind::new(m);
        for (i, &r) in self.reps.iter().enumerate() {
            uf.union(map[i], map[r]);
        }
        uf.into_partition()
    }

    /// Preimage of a partition of `{0, .., m-1}` under `map`.
    pub fn preimage(quotient: &Partition, map: &[usize]) -> Partition {
        let labels: Vec<usize> = map.iter().map(|&b| quotient.reps[b]).collect();
        Partition::from_labels(&labels)
    }

    /// Block index of each element, blocks numbered by least element.
    pub fn block_map(&self) -> (Vec<usize>, usize) {
        let mut index = vec![usize::MAX; self.size()];
        let mut count = 0;
        let map = self
            .reps
            .iter()
            .enumerate()
            .map(|(i, &r)| {
                if r == i {
                    index[i] = count;
                    count += 1;
                }
                index[r]
            })
            .collect();
        (map, count)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks = self.blocks();
        for (bi, block) in blocks.iter().enumerate() {
            if bi > 0 {
                f.write_str("|")?;
            }
            for (i, x) in block.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the block syntax `0,2|1|3`. Every element of the universe must
    /// be listed; the size is the number of elements mentioned.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::zero(0));
        }
        let mut blocks = Vec::new();
        for raw in s.split('|') {
            let mut block = Vec::new();
            for item in raw.split(',') {
                let item = item.trim();
                let x: usize = item
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad element {item:?} in partition {s:?}")))?;
                block.push(x);
            }
            blocks.push(block);
        }
        let n: usize = blocks.iter().map(Vec::len).sum();
        let p = Partition::from_blocks(n, &blocks)
            .map_err(|e| Error::Parse(format!("partition {s:?}: {e}")))?;
        Ok(p)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Disjoint-set forest used to build partitions incrementally.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub fn from_partition(p: &Partition) -> Self {
        UnionFind {
            parent: p.reps.clone(),
            rank: vec![0; p.size()],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    /// Merges the blocks of `a` and `b`; returns false if they were already
    /// merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }

    pub fn into_partition(mut self) -> Partition {
        let n = self.len();
        let mut least = vec![usize::MAX; n];
        let mut reps = Vec::with_capacity(n);
        for i in 0..n {
            let r = self.find(i);
            if least[r] == usize::MAX {
                least[r] = i;
            }
            reps.push(least[r]);
        }
        Partition { reps }
    }
}

use std::fmt;

use crate::error::{PartitionError, Result};

/// A partition of `0..n` into nonempty blocks.
///
/// Blocks are stored sorted, and ordered by their smallest element, so two
/// partitions with the same blocks compare equal and print identically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl VertexPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        let mut owner = vec![usize::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(PartitionError::EmptyBlock(i));
            }
            for &v in block {
                if v >= n {
                    return Err(PartitionError::OutOfRange { vertex: v, n });
                }
                if owner[v] != usize::MAX {
                    return Err(PartitionError::Overlap(v));
                }
                owner[v] = i;
            }
        }
        if let Some(v) = owner.iter().position(|&b| b == usize::MAX) {
            return Err(PartitionError::Missing(v));
        }
        let mut blocks = blocks;
        for block in &mut blocks {
            block.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Self::index(n, blocks))
    }

    /// Builds a partition from a block label per vertex. Labels need not be
    /// contiguous.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut remap = std::collections::HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (v, &label) in labels.iter().enumerate() {
            let next = blocks.len();
            let b = *remap.entry(label).or_insert(next);
            if b == next {
                blocks.push(Vec::new());
            }
            blocks[b].push(v);
        }
        Self::index(labels.len(), blocks)
    }

    pub fn singletons(n: usize) -> Self {
        Self::index(n, (0..n).map(|v| vec![v]).collect())
    }

    fn index(n: usize, blocks: Vec<Vec<usize>>) -> Self {
        let mut block_of = vec![0; n];
        for (i, block) in blocks.iter().enumerate() {
            for &v in block {
                block_of[v] = i;
            }
        }
        Self { blocks, block_of }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Number of vertices covered.
    pub fn order(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    /// Block index per vertex.
    pub fn labels(&self) -> &[usize] {
        &self.block_of
    }
}

impl fmt::Debug for VertexPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.blocks.iter()).finish()
    }
}

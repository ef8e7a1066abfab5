//! Set partitions of {0,…,ℓ−1}, enumerated through restricted growth strings.

/// A set partition of {0,…,ℓ−1}: disjoint nonempty blocks covering the set,
/// blocks ordered by their minima.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn ground_size(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }
}

/// All set partitions of {0,…,ℓ−1}, in lexicographic order of their
/// restricted growth strings. Yields Bell(ℓ) partitions.
pub fn set_partitions(l: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; l];
    gen(&mut rgs, 1, 0, &mut out);
    if l == 0 {
        out.push(SetPartition { blocks: Vec::new() });
    }
    out
}

fn gen(rgs: &mut Vec<usize>, pos: usize, max_used: usize, out: &mut Vec<SetPartition>) {
    if rgs.is_empty() {
        return;
    }
    if pos == rgs.len() {
        let blocks_n = max_used + 1;
        let mut blocks = vec![Vec::new(); blocks_n];
        for (elt, &b) in rgs.iter().enumerate() {
            blocks[b].push(elt);
        }
        out.push(SetPartition { blocks });
        return;
    }
    for b in 0..=max_used + 1 {
        rgs[pos] = b;
        gen(rgs, pos + 1, max_used.max(b), out);
    }
    rgs[pos] = 0;
}

use super::SteinerTripleSystem;

/// A fixed-width row of bits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow { words: vec![0; len.div_ceil(64)] }
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn and_count(&self, other: &BitRow) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + t)
            })
        })
    }
}

/// Rank over GF(2) of the block-by-point characteristic matrix.
pub fn binary_rank(sts: &SteinerTripleSystem) -> usize {
    let n = sts.order() as usize;
    let rows: Vec<BitRow> = sts
        .blocks()
        .iter()
        .map(|t| {
            let mut r = BitRow::zeros(n);
            for p in t.0 {
                r.set(p as usize - 1);
            }
            r
        })
        .collect();
    gf2_rank(rows, n)
}

pub(crate) fn gf2_rank(mut rows: Vec<BitRow>, width: usize) -> usize {
    let mut rank = 0;
    for col in 0..width {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i].get(col)) else { continue };
        rows.swap(rank, piv);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row.get(col) {
                row.xor_assign(&pivot);
            }
        }
        rank += 1;
    }
    rank
}

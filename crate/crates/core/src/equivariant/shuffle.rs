use super::Permutation;

/// A shuffle for a block decomposition `n = b_1 + ... + b_m`: the
/// permutation that is increasing on each block. Shuffles are the canonical
/// left coset representatives of the Young subgroup `Σ_{b_1} × ... × Σ_{b_m}`.
///
/// Stored by labels: `labels[v]` is the block whose image contains `v`, so a
/// shuffle is the same data as the sorted subsets `μ(block_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shuffle {
    labels: Vec<usize>,
}

impl Shuffle {
    pub fn identity(blocks: &[usize]) -> Self {
        let labels = blocks
            .iter()
            .enumerate()
            .flat_map(|(k, &b)| std::iter::repeat_n(k, b))
            .collect();
        Self { labels }
    }

    pub fn from_labels(labels: Vec<usize>) -> Self {
        Self { labels }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// All shuffles for `blocks`, in lexicographic order of labels.
    pub fn all(blocks: &[usize]) -> Vec<Shuffle> {
        let n: usize = blocks.iter().sum();
        let mut remaining = blocks.to_vec();
        let mut cur = Vec::with_capacity(n);
        let mut out = Vec::new();
        fn go(n: usize, remaining: &mut [usize], cur: &mut Vec<usize>, out: &mut Vec<Shuffle>) {
            if cur.len() == n {
                out.push(Shuffle { labels: cur.clone() });
                return;
            }
            for k in 0..remaining.len() {
                if remaining[k] > 0 {
                    remaining[k] -= 1;
                    cur.push(k);
                    go(n, remaining, cur, out);
                    cur.pop();
                    remaining[k] += 1;
                }
            }
        }
        go(n, &mut remaining, &mut cur, &mut out);
        out
    }

    /// The sorted image of each block.
    pub fn subsets(&self, num_blocks: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); num_blocks];
        for (v, &k) in self.labels.iter().enumerate() {
            out[k].push(v);
        }
        out
    }

    pub fn to_permutation(&self, blocks: &[usize]) -> Permutation {
        let images = self.subsets(blocks.len()).concat();
        Permutation::new(images).expect("shuffle labels are a composition")
    }

    /// The unique factorization `α = μ ∘ β` with `μ` a shuffle and `β`
    /// block-preserving.
    pub fn factor(alpha: &Permutation, blocks: &[usize]) -> (Shuffle, Permutation) {
        let mut labels = vec![0; alpha.degree()];
        let mut pos = 0;
        for (k, &b) in blocks.iter().enumerate() {
            for i in pos..pos + b {
                labels[alpha.apply(i)] = k;
            }
            pos += b;
        }
        let mu = Shuffle { labels };
        let beta = mu.to_permutation(blocks).inverse().compose(alpha);
        (mu, beta)
    }

    /// Left multiplication by the adjacent transposition `s_j`:
    /// `s_j ∘ μ = μ' ∘ β` where `β` is the identity or the adjacent
    /// transposition at the returned position.
    pub fn act_generator(&self, j: usize, blocks: &[usize]) -> (Shuffle, Option<usize>) {
        let (a, b) = (self.labels[j], self.labels[j + 1]);
        if a != b {
            let mut labels = self.labels.clone();
            labels.swap(j, j + 1);
            return (Shuffle { labels }, None);
        }
        let offset: usize = blocks[..a].iter().sum();
        let t = self.labels[..j].iter().filter(|&&l| l == a).count();
        (self.clone(), Some(offset + t))
    }
}

//! The strings stored at top-tree nodes.
//!
//! The root holds `S_r`: the characters of `S` sorted stably by label. A
//! child `v'` reached from `v` by an edge `c` followed by `alpha` holds the
//! characters that follow each occurrence of `c` in `S_v` by `|alpha| + 1`
//! positions, in the same order. By induction `S_v` lists the characters
//! following occurrences of `str_S(v)`, ordered by the label of each
//! occurrence's first character.

use crate::alphabet::SENTINEL;
use crate::rank_select::RankSelectString;
use crate::suffix_tree::{NodeId, SuffixTree};

/// Sorts positions by label, ties by position. Returns `(S_r, positions)`
/// where `positions[j]` is the 1-based position in `S` of `S_r[j]`.
pub fn build_root_string(text: &[u32], labels: &[u64]) -> (Vec<u32>, Vec<usize>) {
    let mut order: Vec<usize> = (1..=text.len()).collect();
    order.sort_by_key(|&p| (labels[p - 1], p));
    let seq = order.iter().map(|&p| text[p - 1]).collect();
    (seq, order)
}

/// Derives a child's string from its parent's.
///
/// `text` is the encoded text including its trailing sentinel, so a position
/// of `n + 1` reads the sentinel. `parent_positions[j]` is the 1-based
/// position in `S` of `parent_seq[j]`.
pub fn derive_child_string(
    text: &[u32],
    parent_seq: &[u32],
    parent_positions: &[usize],
    c: u32,
    skip: usize,
) -> (Vec<u32>, Vec<usize>) {
    debug_assert!(skip >= 1);
    debug_assert_eq!(parent_seq.len(), parent_positions.len());
    parent_seq
        .iter()
        .zip(parent_positions)
        .filter(|(&ch, _)| ch == c)
        .map(|(_, &i)| {
            let pos = i + skip;
            let ch = text.get(pos - 1).copied().unwrap_or(SENTINEL);
            (ch, pos)
        })
        .unzip()
}

/// Default string-depth cutoff: `ceil(lg n / max(1, lg lg n))`, and 1 for
/// `n <= 4`.
pub fn default_threshold(n: usize) -> usize {
    if n <= 4 {
        return 1;
    }
    let lg = (n as f64).log2();
    let lglg = lg.log2().max(1.0);
    ((lg / lglg).ceil() as usize).max(1)
}

/// Rank/select strings for the root and every internal node of string depth
/// below the threshold.
#[derive(Debug, Clone)]
pub struct TopTreeStrings {
    threshold: usize,
    per_node: Vec<Option<RankSelectString>>,
    root_positions: Vec<usize>,
}

impl TopTreeStrings {
    pub fn build(st: &SuffixTree, labels: &[u64], threshold: usize) -> Self {
        assert!(threshold >= 1, "threshold must be at least 1");
        let text = st.text();
        let n = st.text_len();
        let sigma = st.alphabet().sigma() as u32 + 1;
        let mut per_node: Vec<Option<RankSelectString>> = vec![None; st.len()];

        let (root_seq, root_positions) = build_root_string(&text[..n], labels);
        // explicit stack of (node, its string, positions of its entries)
        let mut stack = vec![(st.root(), root_seq, root_positions.clone())];
        while let Some((v, seq, positions)) = stack.pop() {
            for &(c, child) in &st.node(v).children {
                let node = st.node(child);
                if node.is_leaf() || node.string_depth >= threshold {
                    continue;
                }
                let (cseq, cpos) = derive_child_string(text, &seq, &positions, c, node.edge_len);
                stack.push((child, cseq, cpos));
            }
            per_node[v] = Some(RankSelectString::new(&seq, sigma).expect("codes within alphabet"));
        }

        TopTreeStrings {
            threshold,
            per_node,
            root_positions,
        }
    }

    pub fn threshold(&self) -> usize {
        self.threshold
    }

    #[inline]
    pub fn get(&self, v: NodeId) -> Option<&RankSelectString> {
        self.per_node.get(v).and_then(Option::as_ref)
    }

    pub fn root_string(&self) -> &RankSelectString {
        self.get(SuffixTree::ROOT)
            .expect("root string always stored")
    }

    /// 1-based position in `S` of each entry of `S_r`.
    pub fn root_positions(&self) -> &[usize] {
        &self.root_positions
    }

    /// Ids of nodes carrying a string.
    pub fn stored_nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.per_node
            .iter()
            .enumerate()
            .filter_map(|(v, s)| s.as_ref().map(|_| v))
    }

    pub fn space(&self, st: &SuffixTree) -> SpaceReport {
        let mut tree_depth = vec![0usize; st.len()];
        // parents precede children in a BFS from the root
        let mut queue = std::collections::VecDeque::from([st.root()]);
        while let Some(v) = queue.pop_front() {
            for &(_, c) in &st.node(v).children {
                tree_depth[c] = tree_depth[v] + 1;
                queue.push_back(c);
            }
        }
        let mut per_depth: Vec<usize> = Vec::new();
        let mut total = 0;
        for v in self.stored_nodes() {
            let d = tree_depth[v];
            if per_depth.len() <= d {
                per_depth.resize(d + 1, 0);
            }
            let len = self.per_node[v].as_ref().unwrap().len();
            per_depth[d] += len;
            total += len;
        }
        SpaceReport {
            per_tree_depth: per_depth,
            total_chars: total,
            stored_nodes: self.stored_nodes().count(),
        }
    }
}

/// Character counts of the stored strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceReport {
    /// Entry `d` sums `|S_v|` over stored nodes `d` edges below the root.
    pub per_tree_depth: Vec<usize>,
    pub total_chars: usize,
    pub stored_nodes: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    const S: &[u8] = b"abracadabra";
    const LABELS: [u64; 11] = [41, 23, 93, 66, 53, 33, 2, 24, 37, 29, 62];

    fn decode(st: &SuffixTree, seq: &[u32]) -> String {
        seq.iter()
            .map(|&c| st.alphabet().byte(c).map_or('$', char::from))
            .collect()
    }

    #[test]
    fn root_string_of_worked_example() {
        let st = SuffixTree::build(S);
        let (seq, pos) = build_root_string(&st.text()[..11], &LABELS);
        assert_eq!(decode(&st, &seq), "dbarabacaar");
        assert_eq!(pos, vec![7, 2, 8, 10, 6, 9, 1, 5, 11, 4, 3]);
    }

    #[test]
    fn root_string_ties_and_trivia() {
        let st = SuffixTree::build(S);
        let (seq, _) = build_root_string(&st.text()[..11], &[5; 11]);
        assert_eq!(decode(&st, &seq), "abracadabra");
        let (seq, pos) = build_root_string(&[3], &[9]);
        assert_eq!((seq, pos), (vec![3], vec![1]));
    }

    #[test]
    fn derive_children_of_root() {
        let st = SuffixTree::build(S);
        let text = st.text();
        let (root, pos) = build_root_string(&text[..11], &LABELS);
        let a = st.alphabet().code(b'a').unwrap();
        let b = st.alphabet().code(b'b').unwrap();

        let (child, cpos) = derive_child_string(text, &root, &pos, a, 1);
        assert_eq!(decode(&st, &child), "bdb$c");
        assert_eq!(cpos, vec![9, 7, 2, 12, 5]);

        let (child, _) = derive_child_string(text, &root, &pos, b, 3);
        assert_eq!(decode(&st, &child), "c$");

        let (child, cpos) = derive_child_string(text, &child, &[5, 12], 99, 1);
        assert!(child.is_empty() && cpos.is_empty());
    }

    #[test]
    fn stored_strings_follow_threshold() {
        let st = SuffixTree::build(S);
        let tts = TopTreeStrings::build(&st, &LABELS, 2);
        let a = st.child_byte(st.root(), b'a').unwrap();
        assert_eq!(decode(&st, &tts.get(a).unwrap().to_vec()), "bdb$c");
        // "bra" has depth 3 and is not stored with threshold 2
        assert!(tts.get(st.child_byte(st.root(), b'b').unwrap()).is_none());

        let only_root = TopTreeStrings::build(&st, &LABELS, 1);
        assert_eq!(
            only_root.stored_nodes().collect::<Vec<_>>(),
            vec![st.root()]
        );

        let tiny = SuffixTree::build(b"q");
        let tts = TopTreeStrings::build(&tiny, &[0], 5);
        assert_eq!(tts.stored_nodes().count(), 1);
        assert_eq!(tts.root_string().len(), 1);
    }

    #[test]
    fn threshold_policy() {
        assert_eq!(default_threshold(1), 1);
        assert_eq!(default_threshold(4), 1);
        assert_eq!(default_threshold(11), 2);
        assert_eq!(default_threshold(2000), 4);
        assert_eq!(default_threshold(1 << 16), 4);
    }
}

//! Suffix tree over a sentinel-terminated text, built from its suffix array
//! and LCP array.
//!
//! Ranks are 1-based: the sentinel-only suffix always has rank 1, and the
//! root's interval is `(1, n + 1)` for a text of `n` real characters.

use crate::alphabet::{Alphabet, SENTINEL};
use crate::error::{invalid, Result};

pub type NodeId = usize;

/// A node of the compacted suffix trie.
#[derive(Debug, Clone)]
pub struct SuffixNode {
    /// 0-based start of the incoming edge label in the text.
    pub edge_start: usize,
    pub edge_len: usize,
    /// Length of the string spelled from the root to this node.
    pub string_depth: usize,
    /// 1-based inclusive interval of suffix ranks below this node.
    pub lo: usize,
    pub hi: usize,
    pub parent: Option<NodeId>,
    /// Children keyed by the first code of their edge, sorted by code.
    pub children: Vec<(u32, NodeId)>,
}

impl SuffixNode {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn interval_len(&self) -> usize {
        self.hi + 1 - self.lo
    }
}

/// Outcome of matching a pattern from the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocusResult {
    pub matched: bool,
    /// Each traversed edge, identified by its lower node, with the number of
    /// its characters the pattern consumed.
    pub path: Vec<(NodeId, usize)>,
    pub locus_node: NodeId,
}

#[derive(Debug, Clone)]
pub struct SuffixTree {
    alphabet: Alphabet,
    text: Vec<u32>,
    sa: Vec<usize>,
    nodes: Vec<SuffixNode>,
}

impl SuffixTree {
    pub const ROOT: NodeId = 0;

    /// Builds the tree of `text` with the sentinel appended internally.
    pub fn build(text: &[u8]) -> Self {
        let alphabet = Alphabet::from_text(text);
        let codes = alphabet.encode_with_sentinel(text);
        Self::from_parts(alphabet, codes)
    }

    /// Builds from dense codes whose last symbol must be the unique sentinel.
    ///
    /// Codes `1..` are taken as-is; the returned tree has no byte alphabet
    /// beyond the identity on codes below 256.
    pub fn from_codes(codes: Vec<u32>) -> Result<Self> {
        match codes.iter().position(|&c| c == SENTINEL) {
            None => return Err(invalid!("text must end with the sentinel")),
            Some(p) if p + 1 != codes.len() => {
                return Err(invalid!(
                    "sentinel occurs at position {} before the end",
                    p + 1
                ))
            }
            _ => {}
        }
        let bytes: Vec<u8> = codes
            .iter()
            .filter(|&&c| c != SENTINEL)
            .map(|&c| c as u8)
            .collect();
        let alphabet = Alphabet::from_text(&bytes);
        Ok(Self::from_parts(alphabet, codes))
    }

    fn from_parts(alphabet: Alphabet, text: Vec<u32>) -> Self {
        let sa = suffix_array(&text);
        let lcp = lcp_array(&text, &sa);
        let nodes = build_nodes(&text, &sa, &lcp);
        SuffixTree {
            alphabet,
            text,
            sa,
            nodes,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// The encoded text including the trailing sentinel.
    pub fn text(&self) -> &[u32] {
        &self.text
    }

    /// Number of real characters (sentinel excluded).
    pub fn text_len(&self) -> usize {
        self.text.len() - 1
    }

    /// 0-based suffix starts in lexicographic order; entry `r - 1` holds the
    /// suffix of rank `r`.
    pub fn suffix_array(&self) -> &[usize] {
        &self.sa
    }

    /// Inverse suffix array: the 1-based rank of each 0-based suffix start.
    pub fn suffix_ranks(&self) -> Vec<usize> {
        let mut ranks = vec![0; self.sa.len()];
        for (r, &p) in self.sa.iter().enumerate() {
            ranks[p] = r + 1;
        }
        ranks
    }

    pub fn root(&self) -> NodeId {
        Self::ROOT
    }

    pub fn node(&self, v: NodeId) -> &SuffixNode {
        &self.nodes[v]
    }

    pub fn nodes(&self) -> &[SuffixNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    #[inline]
    pub fn child(&self, v: NodeId, c: u32) -> Option<NodeId> {
        let ch = &self.nodes[v].children;
        ch.binary_search_by_key(&c, |&(k, _)| k)
            .ok()
            .map(|i| ch[i].1)
    }

    /// Child lookup by raw byte.
    pub fn child_byte(&self, v: NodeId, b: u8) -> Option<NodeId> {
        self.child(v, self.alphabet.code(b)?)
    }

    /// The codes on the incoming edge of `v`.
    pub fn edge_label(&self, v: NodeId) -> &[u32] {
        let n = &self.nodes[v];
        &self.text[n.edge_start..n.edge_start + n.edge_len]
    }

    /// `str_S(v)` as codes.
    pub fn path_label(&self, v: NodeId) -> &[u32] {
        let n = &self.nodes[v];
        let start = self.sa[n.lo - 1];
        &self.text[start..start + n.string_depth]
    }

    pub fn suffix_interval(&self, v: NodeId) -> (usize, usize) {
        let n = &self.nodes[v];
        (n.lo, n.hi)
    }

    /// Matches a byte pattern from the root.
    pub fn locus(&self, pattern: &[u8]) -> LocusResult {
        match self.alphabet.encode(pattern) {
            Some(codes) => self.locus_codes(&codes),
            None => LocusResult {
                matched: false,
                path: Vec::new(),
                locus_node: Self::ROOT,
            },
        }
    }

    /// Matches an encoded pattern (no sentinel) from the root.
    pub fn locus_codes(&self, pattern: &[u32]) -> LocusResult {
        let mut path = Vec::new();
        let mut node = Self::ROOT;
        let mut i = 0;
        while i < pattern.len() {
            let Some(child) = self.child(node, pattern[i]) else {
                return LocusResult {
                    matched: false,
                    path,
                    locus_node: node,
                };
            };
            let edge = self.edge_label(child);
            let take = edge.len().min(pattern.len() - i);
            if edge[..take] != pattern[i..i + take] {
                return LocusResult {
                    matched: false,
                    path,
                    locus_node: node,
                };
            }
            path.push((child, take));
            i += take;
            node = child;
        }
        LocusResult {
            matched: true,
            path,
            locus_node: node,
        }
    }

    /// Suffix interval of a byte pattern, or `None` if it does not occur.
    pub fn pattern_interval(&self, pattern: &[u8]) -> Option<(usize, usize)> {
        let res = self.locus(pattern);
        res.matched.then(|| self.suffix_interval(res.locus_node))
    }
}

/// Suffix array by prefix doubling, `O(n log^2 n)`.
pub(crate) fn suffix_array(text: &[u32]) -> Vec<usize> {
    let n = text.len();
    let mut sa: Vec<usize> = (0..n).collect();
    let mut rank: Vec<usize> = text.iter().map(|&c| c as usize).collect();
    let mut next = vec![0usize; n];
    let mut k = 1;
    loop {
        let key = |i: usize| (rank[i], if i + k < n { rank[i + k] + 1 } else { 0 });
        sa.sort_unstable_by_key(|&i| key(i));
        next[sa[0]] = 0;
        for w in 1..n {
            next[sa[w]] = next[sa[w - 1]] + usize::from(key(sa[w - 1]) != key(sa[w]));
        }
        std::mem::swap(&mut rank, &mut next);
        if rank[sa[n - 1]] == n - 1 || k >= n {
            break;
        }
        k *= 2;
    }
    sa
}

/// Kasai's algorithm; `lcp[r]` is the LCP of the suffixes of ranks `r` and
/// `r + 1` (0-based), with `lcp[0] = 0`.
pub(crate) fn lcp_array(text: &[u32], sa: &[usize]) -> Vec<usize> {
    let n = text.len();
    let mut rank = vec![0; n];
    for (r, &p) in sa.iter().enumerate() {
        rank[p] = r;
    }
    let mut lcp = vec![0; n];
    let mut h = 0;
    for i in 0..n {
        if rank[i] > 0 {
            let j = sa[rank[i] - 1];
            while i + h < n && j + h < n && text[i + h] == text[j + h] {
                h += 1;
            }
            lcp[rank[i]] = h;
            h = h.saturating_sub(1);
        } else {
            h = 0;
        }
    }
    lcp
}

fn build_nodes(text: &[u32], sa: &[usize], lcp: &[usize]) -> Vec<SuffixNode> {
    let total = text.len();
    let new_node = |depth: usize, lo: usize| SuffixNode {
        edge_start: 0,
        edge_len: 0,
        string_depth: depth,
        lo,
        hi: lo,
        parent: None,
        children: Vec::new(),
    };
    let mut nodes = vec![new_node(0, 1)];
    let mut stack: Vec<NodeId> = vec![SuffixTree::ROOT];

    for r in 0..total {
        let l = lcp[r];
        let mut last: Option<NodeId> = None;
        while nodes[*stack.last().unwrap()].string_depth > l {
            let x = stack.pop().unwrap();
            nodes[x].hi = r;
            if let Some(prev) = last {
                nodes[prev].parent = Some(x);
            }
            last = Some(x);
        }
        let top = *stack.last().unwrap();
        if let Some(x) = last {
            if nodes[top].string_depth < l {
                let id = nodes.len();
                nodes.push(new_node(l, nodes[x].lo));
                nodes[x].parent = Some(id);
                stack.push(id);
            } else {
                nodes[x].parent = Some(top);
            }
        }
        let leaf = nodes.len();
        nodes.push(new_node(total - sa[r], r + 1));
        stack.push(leaf);
    }
    let mut last: Option<NodeId> = None;
    while let Some(x) = stack.pop() {
        nodes[x].hi = total;
        if let Some(prev) = last {
            nodes[prev].parent = Some(x);
        }
        last = Some(x);
    }

    for v in 1..nodes.len() {
        let p = nodes[v].parent.expect("non-root node without parent");
        let pd = nodes[p].string_depth;
        let start = sa[nodes[v].lo - 1] + pd;
        nodes[v].edge_start = start;
        nodes[v].edge_len = nodes[v].string_depth - pd;
        nodes[p].children.push((text[start], v));
    }
    for n in nodes.iter_mut() {
        n.children.sort_unstable_by_key(|&(c, _)| c);
    }
    nodes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_sorted_suffixes(text: &[u32]) -> Vec<usize> {
        let mut s: Vec<usize> = (0..text.len()).collect();
        s.sort_by(|&a, &b| text[a..].cmp(&text[b..]));
        s
    }

    fn label(st: &SuffixTree, v: NodeId) -> Vec<u8> {
        st.path_label(v)
            .iter()
            .map(|&c| st.alphabet().byte(c).unwrap_or(b'$'))
            .collect()
    }

    #[test]
    fn abracadabra_root_children() {
        let st = SuffixTree::build(b"abracadabra");
        let firsts: Vec<u8> = st
            .node(st.root())
            .children
            .iter()
            .map(|&(c, _)| st.alphabet().byte(c).unwrap_or(b'$'))
            .collect();
        assert_eq!(firsts, b"$abcdr");
        assert_eq!(st.suffix_interval(st.root()), (1, 12));
        assert!(st.len() <= 2 * 12);
    }

    #[test]
    fn minimal_tree() {
        let st = SuffixTree::build(b"a");
        let root = st.node(st.root());
        assert_eq!(root.children.len(), 2);
        assert!(root.children.iter().all(|&(_, v)| st.node(v).is_leaf()));
    }

    #[test]
    fn child_queries() {
        let st = SuffixTree::build(b"abracadabra");
        let b = st.child_byte(st.root(), b'b').unwrap();
        assert_eq!(label(&st, b), b"bra");
        assert_eq!(st.child_byte(st.root(), b'z'), None);
        let a = st.child_byte(st.root(), b'a').unwrap();
        assert_eq!(label(&st, a), b"a");
        assert_eq!(st.node(a).interval_len(), 5);
        let ab = st.child_byte(a, b'b').unwrap();
        assert_eq!(label(&st, ab), b"abra");
    }

    #[test]
    fn locus_examples() {
        let st = SuffixTree::build(b"abracadabra");
        let res = st.locus(b"abra");
        assert!(res.matched);
        assert_eq!(label(&st, res.locus_node), b"abra");
        assert_eq!(st.node(res.locus_node).interval_len(), 2);
        assert_eq!(res.path.len(), 2);

        assert!(!st.locus(b"abx").matched);
        assert!(!st.locus(b"zz").matched);

        let res = st.locus(b"b");
        assert!(res.matched);
        assert_eq!(label(&st, res.locus_node), b"bra");
        assert_eq!(res.path, vec![(res.locus_node, 1)]);
        assert_eq!(st.node(res.locus_node).interval_len(), 2);
    }

    #[test]
    fn leaf_interval_is_single() {
        let st = SuffixTree::build(b"mississippi");
        for n in st.nodes().iter().filter(|n| n.is_leaf()) {
            assert_eq!(n.interval_len(), 1);
        }
    }

    #[test]
    fn rejects_misplaced_sentinel() {
        assert!(SuffixTree::from_codes(vec![1, 0, 2, 0]).is_err());
        assert!(SuffixTree::from_codes(vec![1, 2]).is_err());
        assert!(SuffixTree::from_codes(vec![1, 2, 0]).is_ok());
    }

    #[test]
    fn suffix_array_matches_brute_force() {
        for text in [
            &b"abracadabra"[..],
            b"aaaaaaa",
            b"a",
            b"mississippi",
            b"abababab",
        ] {
            let st = SuffixTree::build(text);
            assert_eq!(
                st.suffix_array(),
                brute_sorted_suffixes(st.text()).as_slice()
            );
        }
    }
}

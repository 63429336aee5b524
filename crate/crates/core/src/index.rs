//! The substring range counting index.
//!
//! Patterns of length at most the threshold descend the top tree, narrowing
//! a label interval with two rank queries per edge. Longer patterns find
//! their locus and count points in `suffix interval x [a, b]`.

use crate::error::{invalid, Error, Result};
use crate::label_index::LabelIndex;
use crate::node_strings::{default_threshold, SpaceReport, TopTreeStrings};
use crate::oracle;
use crate::range2d::RangeCounter2D;
use crate::suffix_tree::{NodeId, SuffixTree};

/// A byte string with one integer label in `[0, universe]` per position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledText {
    text: Vec<u8>,
    labels: Vec<u64>,
    universe: u64,
}

impl LabeledText {
    pub fn new(text: Vec<u8>, labels: Vec<u64>, universe: u64) -> Result<Self> {
        if text.len() != labels.len() {
            return Err(invalid!(
                "{} labels for a text of {} characters",
                labels.len(),
                text.len()
            ));
        }
        if let Some((i, l)) = labels.iter().enumerate().find(|(_, &l)| l > universe) {
            return Err(invalid!(
                "label {l} at position {} exceeds universe {universe}",
                i + 1
            ));
        }
        Ok(LabeledText {
            text,
            labels,
            universe,
        })
    }

    pub fn text(&self) -> &[u8] {
        &self.text
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn universe(&self) -> u64 {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }
}

/// A pattern with a label interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SrcQuery {
    pattern: Vec<u8>,
    a: u64,
    b: u64,
}

impl SrcQuery {
    pub fn new(pattern: impl Into<Vec<u8>>, a: u64, b: u64) -> Result<Self> {
        let pattern = pattern.into();
        if pattern.is_empty() {
            return Err(invalid!("pattern must be non-empty"));
        }
        Ok(SrcQuery { pattern, a, b })
    }

    pub fn pattern(&self) -> &[u8] {
        &self.pattern
    }

    pub fn range(&self) -> (u64, u64) {
        (self.a, self.b)
    }
}

#[derive(Debug, Clone, Default)]
pub struct BuildConfig {
    /// Overrides the string-depth cutoff for the top tree.
    pub threshold: Option<usize>,
    /// Cross-check a sample of queries against the brute-force oracle.
    pub self_check: bool,
}

/// Which algorithm answered a query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Descent through the node strings.
    Descent,
    /// Locus in the suffix tree plus 2D range counting.
    RangeCount,
}

/// Work counters for one query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QueryTrace {
    pub route: Route,
    pub rank_calls: usize,
    pub edges: usize,
}

impl QueryTrace {
    fn new(route: Route) -> Self {
        QueryTrace {
            route,
            rank_calls: 0,
            edges: 0,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SrcIndex {
    st: SuffixTree,
    tts: TopTreeStrings,
    li: LabelIndex,
    rc: RangeCounter2D,
    threshold: usize,
}

// Encoded pattern and label range of a validated query.
type Prepared = (Vec<u32>, (u64, u64));

// Result of a descent: 1-based interval in the string of the last node
// reached, plus the (parent, code) pairs of the edges taken.
struct Descent {
    lo: usize,
    hi: usize,
    edges: Vec<(NodeId, u32)>,
}

impl SrcIndex {
    pub fn build(lt: &LabeledText, config: &BuildConfig) -> Result<Self> {
        if lt.is_empty() {
            return Err(invalid!("text must be non-empty"));
        }
        let threshold = config
            .threshold
            .unwrap_or_else(|| default_threshold(lt.len()));
        if threshold == 0 {
            return Err(invalid!("threshold must be at least 1"));
        }
        let st = SuffixTree::build(lt.text());
        let tts = TopTreeStrings::build(&st, lt.labels(), threshold);
        let li = LabelIndex::new(lt.labels(), lt.universe());
        // the sentinel-only suffix has rank 1 and carries no point
        let ys: Vec<u64> = st.suffix_array()[1..]
            .iter()
            .map(|&p| lt.labels()[p])
            .collect();
        let rc = RangeCounter2D::new(&ys);
        let idx = SrcIndex {
            st,
            tts,
            li,
            rc,
            threshold,
        };
        if config.self_check {
            idx.self_check(lt)?;
        }
        Ok(idx)
    }

    pub fn threshold(&self) -> usize {
        self.threshold
    }

    pub fn universe(&self) -> u64 {
        self.li.universe()
    }

    pub fn text_len(&self) -> usize {
        self.st.text_len()
    }

    pub fn suffix_tree(&self) -> &SuffixTree {
        &self.st
    }

    pub fn node_strings(&self) -> &TopTreeStrings {
        &self.tts
    }

    pub fn label_index(&self) -> &LabelIndex {
        &self.li
    }

    pub fn range_counter(&self) -> &RangeCounter2D {
        &self.rc
    }

    pub fn space(&self) -> SpaceReport {
        self.tts.space(&self.st)
    }

    /// Occurrences of the pattern whose first character is labelled in `[a, b]`.
    pub fn count(&self, q: &SrcQuery) -> Result<usize> {
        self.count_traced(q).map(|(c, _)| c)
    }

    /// Shorthand for [`SrcIndex::count`].
    pub fn count_range(&self, pattern: &[u8], a: u64, b: u64) -> Result<usize> {
        self.count(&SrcQuery::new(pattern, a, b)?)
    }

    pub fn is_empty(&self, q: &SrcQuery) -> Result<bool> {
        Ok(self.count(q)? == 0)
    }

    pub fn count_traced(&self, q: &SrcQuery) -> Result<(usize, QueryTrace)> {
        self.count_via(q, self.route_for(q))
    }

    pub fn route_for(&self, q: &SrcQuery) -> Route {
        if q.pattern.len() <= self.threshold {
            Route::Descent
        } else {
            Route::RangeCount
        }
    }

    /// Counts along a forced route. The descent is only available for
    /// patterns no longer than the threshold.
    pub fn count_via(&self, q: &SrcQuery, route: Route) -> Result<(usize, QueryTrace)> {
        let mut trace = QueryTrace::new(route);
        let Some((codes, (a, b))) = self.prepare(q, route)? else {
            return Ok((0, trace));
        };
        let count = match route {
            Route::Descent => self
                .descend(&codes, a, b, &mut trace, false)
                .map_or(0, |d| d.hi + 1 - d.lo),
            Route::RangeCount => self
                .locus_interval(&codes)
                .map_or(0, |(lo, hi)| self.rc.count_rect(lo - 1, hi - 1, a, b)),
        };
        Ok((count, trace))
    }

    /// 1-based start of some occurrence labelled in `[a, b]`, if any.
    pub fn report_one(&self, q: &SrcQuery) -> Result<Option<usize>> {
        let route = self.route_for(q);
        let Some((codes, (a, b))) = self.prepare(q, route)? else {
            return Ok(None);
        };
        match route {
            Route::Descent => {
                let mut trace = QueryTrace::new(route);
                let Some(d) = self.descend(&codes, a, b, &mut trace, true) else {
                    return Ok(None);
                };
                let mut j = d.lo;
                for &(parent, c) in d.edges.iter().rev() {
                    j = self.string_at(parent).select(c, j)?;
                }
                Ok(Some(self.tts.root_positions()[j - 1]))
            }
            Route::RangeCount => {
                let Some((lo, hi)) = self.locus_interval(&codes) else {
                    return Ok(None);
                };
                let sa = self.st.suffix_array();
                Ok(self.rc.find_point(lo - 1, hi - 1, a, b).map(|x| sa[x] + 1))
            }
        }
    }

    // Validates the query and encodes it; `None` means the answer is empty.
    fn prepare(&self, q: &SrcQuery, route: Route) -> Result<Option<Prepared>> {
        if route == Route::Descent && q.pattern.len() > self.threshold {
            return Err(invalid!(
                "pattern of length {} exceeds descent threshold {}",
                q.pattern.len(),
                self.threshold
            ));
        }
        if self.li.label_interval(q.a, q.b)?.is_none() {
            return Ok(None);
        }
        Ok(self
            .st
            .alphabet()
            .encode(&q.pattern)
            .map(|codes| (codes, (q.a, q.b))))
    }

    fn string_at(&self, v: NodeId) -> &crate::rank_select::RankSelectString {
        self.tts.get(v).expect("descent only leaves stored nodes")
    }

    fn locus_interval(&self, codes: &[u32]) -> Option<(usize, usize)> {
        let res = self.st.locus_codes(codes);
        res.matched.then(|| self.st.suffix_interval(res.locus_node))
    }

    fn descend(
        &self,
        codes: &[u32],
        a: u64,
        b: u64,
        trace: &mut QueryTrace,
        keep_edges: bool,
    ) -> Option<Descent> {
        let (mut lo, mut hi) = self.li.label_interval(a, b).ok()??;
        let text = self.st.text();
        let mut edges = Vec::new();
        let mut node = self.st.root();
        let mut i = 0;
        while i < codes.len() {
            let c = codes[i];
            let child = self.st.child(node, c)?;
            let s = self.string_at(node);
            let new_lo = s.rank_unchecked(c, lo - 1) + 1;
            let new_hi = s.rank_unchecked(c, hi);
            trace.rank_calls += 2;
            trace.edges += 1;
            if new_lo > new_hi {
                return None;
            }
            let cn = self.st.node(child);
            let take = cn.edge_len.min(codes.len() - i);
            if text[cn.edge_start + 1..cn.edge_start + take] != codes[i + 1..i + take] {
                return None;
            }
            if keep_edges {
                edges.push((node, c));
            }
            lo = new_lo;
            hi = new_hi;
            i += take;
            node = child;
        }
        Some(Descent { lo, hi, edges })
    }

    fn self_check(&self, lt: &LabeledText) -> Result<()> {
        let n = lt.len();
        let labels = lt.labels();
        let mut sorted = labels.to_vec();
        sorted.sort_unstable();
        let median = sorted[n / 2];
        let step = (n / 16).max(1);
        for start in (0..n).step_by(step) {
            for m in 1..=(self.threshold + 2).min(n - start) {
                let pattern = &lt.text()[start..start + m];
                let l = labels[start];
                for (a, b) in [(0, lt.universe()), (l, l), (sorted[0], median)] {
                    let q = SrcQuery::new(pattern, a, b)?;
                    let got = self.count(&q)?;
                    let want = oracle::naive_count(lt, pattern, a, b);
                    if got != want {
                        return Err(Error::SelfCheck(format!(
                            "pattern {:?} in [{a}, {b}]: index {got}, oracle {want}",
                            String::from_utf8_lossy(pattern)
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

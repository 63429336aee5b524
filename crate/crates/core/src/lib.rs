//! Substring range counting over small alphabets.
//!
//! Given a string `S` whose positions carry integer labels in `[0, u]`,
//! [`SrcIndex`] counts the occurrences of a pattern `P` whose first
//! character's label lies in `[a, b]`. Short patterns are answered by
//! descending the top of the suffix tree through per-node rank/select
//! strings; long patterns use the suffix tree locus and a 2D range counter.
//!
//! ```
//! use srcount::{BuildConfig, LabeledText, SrcIndex, SrcQuery};
//!
//! let labels = vec![41, 23, 93, 66, 53, 33, 2, 24, 37, 29, 62];
//! let lt = LabeledText::new(b"abracadabra".to_vec(), labels, 93).unwrap();
//! let idx = SrcIndex::build(&lt, &BuildConfig::default()).unwrap();
//! let q = SrcQuery::new("ab", 20, 40).unwrap();
//! assert_eq!(idx.count(&q).unwrap(), 1);
//! assert_eq!(idx.report_one(&q).unwrap(), Some(8));
//! ```
//!
//! [`applications`] reduces position-restricted counting, indexing with
//! intervals, indexing with gaps and aligned pattern matching to this query.

pub mod alphabet;
pub mod applications;
mod error;
pub mod index;
pub mod label_index;
pub mod node_strings;
pub mod oracle;
pub mod range2d;
pub mod rank_select;
pub mod suffix_tree;

pub use alphabet::Alphabet;
pub use applications::{
    AlignedIndex, GapSpec, GappedIndex, IntervalIndex, IntervalSet, PositionIndex,
};
pub use error::{Error, Result};
pub use index::{BuildConfig, LabeledText, QueryTrace, Route, SrcIndex, SrcQuery};
pub use label_index::LabelIndex;
pub use node_strings::{SpaceReport, TopTreeStrings};
pub use range2d::RangeCounter2D;
pub use rank_select::RankSelectString;
pub use suffix_tree::{LocusResult, NodeId, SuffixNode, SuffixTree};

//! Exact constructions on finite quasi-metric (Lawvere metric) spaces and
//! finite approach spaces: the weight calculus, Yoneda completion,
//! sobrification, Smyth completeness, the order/topology change-of-base
//! functors, and closed-form half-line exemplars.

pub mod approach;
pub mod completion;
pub mod extarith;
pub mod format;
pub mod halfline;
pub mod ordtop;
pub mod sobriety;
pub mod space;
pub mod subset;
pub mod suite;
pub mod weights;

pub use approach::{alexandroff, specialization, DeltaTable, FiniteApproach};
pub use extarith::ExtVal;
pub use space::{FiniteSpace, SpaceFlags, SpaceMap};
pub use subset::Subset;
pub use weights::{Coweight, Weight};
pub use completion::{yoneda_completion, Net};
pub use format::Document;
pub use halfline::{AbstractSubset, HalfLinePoint, HalfMetric, RationalSeq};
pub use ordtop::{FinitePreorder, FiniteTopology};
pub use sobriety::{is_sober, sobrify};
pub use suite::{run_suite, LawReport, SuiteConfig};

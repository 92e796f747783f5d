//! Classical root systems of types A to D and the combinatorics of regular
//! subalgebras: closed root sets, parabolic sets, Weyl-group conjugacy,
//! normalizers and Lie closures computed purely on root data.

mod orthogonal;
mod parabolic;
mod regular;
mod root;
pub mod sample;
mod system;

pub use orthogonal::strongly_orthogonal_maximal_sets;
pub use parabolic::{crossed_coweight, enumerate_parabolics, parabolic_oracle, ParabolicRootSet, DEFAULT_RANK_CAP};
pub use regular::{
    closed_closure, lie_closure_regular, normalizer, normalizer_regular, ClosureMode, RegularSubalgebra,
};
pub use root::{format_set, Root, RootSet};
pub use system::{indices, root_vector, Family, Mask, RootSystem, WeylElement};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("unsupported root system: {0}")]
    Unsupported(String),
    #[error("simple root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("not a root of the system: {0}")]
    NotARoot(String),
    #[error("root set is not closed: {0}")]
    NotClosed(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("rank {rank} exceeds the enumeration cap {cap}")]
    RankCap { rank: usize, cap: usize },
    #[error("cannot parse root literal {0:?}")]
    Parse(String),
}

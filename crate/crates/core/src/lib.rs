pub mod error;
pub mod graph;
pub mod io;
pub mod chordless;
pub mod corpus;
pub mod latching;
pub mod meter;
pub mod minsep;
pub mod oracle;
pub mod planar;
pub mod pmc;
pub mod polydelay;
pub mod set;
pub mod steering;
pub mod td;
pub mod treewidth;

pub use error::{Error, Result};
pub use graph::{Component, Graph};
pub use set::VertexSet;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/latching.md")]
    mod latching {}
    #[doc = include_str!("../../../book/src/separators.md")]
    mod separators {}
    #[doc = include_str!("../../../book/src/steering.md")]
    mod steering {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/scheduler.md")]
    mod scheduler {}
    #[doc = include_str!("../../../book/src/treewidth.md")]
    mod treewidth {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/testing.md")]
    mod testing {}
}

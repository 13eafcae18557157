//! Nilpotent orbits of classical Lie algebras, their Lusztig-Spaltenstein
//! duals and symbols, and explicit Langlands parameters for the members of
//! unipotent Arthur packets of complex classical groups.
//!
//! ```
//! use unipotent::packet::bv_packet;
//! use unipotent::{Case, Orbit, Partition, Symbol};
//!
//! let case = Case::Cn;
//! let o = Orbit::new(case.dual_family(), "7,3,3".parse::<Partition>()?, None)?;
//! assert_eq!(Symbol::of(&o, case)?.lusztig_rank(), 1);
//! for m in bv_packet(&o, case)? {
//!     println!("{:?} {}", m.eps, m.param);
//! }
//! # Ok::<(), unipotent::Error>(())
//! ```

pub mod error;
pub mod gf2;
pub mod json;
pub mod orbit;
pub mod packet;
pub mod parameter;
pub mod partition;
pub mod scalar;
pub mod spectral;
pub mod symbol;

pub use error::{Error, Result};
pub use orbit::{Case, Family, Label, Orbit};
pub use packet::{ArthurMember, ArthurPacket, BvData, LanglandsParam, LeviData, Member, NormalForm};
pub use parameter::{ArthurParameter, Character, Decomposition, Group, Summand, Violation};
pub use partition::{CollapseKind, ParityClass, Partition};
pub use scalar::Scalar;
pub use spectral::SpAnalysis;
pub use symbol::{ComponentGroup, PairStructure, Symbol};

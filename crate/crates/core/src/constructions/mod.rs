//! The recursive construction: high-girth hypergraphs, blow-ups, the tower of
//! graphs `F_i`, good colourings, focussing and witness extraction.

mod blowup;
mod checks;
mod focus;
mod good;
mod rational;
mod search;
mod theorem8;
mod tower;
mod witness;

pub use blowup::{build_l, BlowupTrace};
pub use checks::{verify_lemma3, verify_lemma5, LEMMA5_MAX_VERTICES};
pub use focus::{focus, FocusResult};
pub use good::good_colouring;
pub use rational::Rational;
pub use search::{hypergraph_search, SearchBudget, SearchConfig};
pub use theorem8::{build_theorem8, theorem8_colouring, Theorem8Construction};
pub use tower::{build_f_tower, tower_size_lower_bounds, tower_size_lower_bounds_u64, ConstructionTrace, SizeBudget};
pub use witness::{extract_witness, RamseyWitness};

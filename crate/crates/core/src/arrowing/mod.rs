//! The arrowing relation `F -> (H)_q`: decisions with certificates, good-colouring
//! profiles, and the separator probe.

mod arrows;
mod colouring;
mod profile;
mod separator;

pub use arrows::{arrows, arrows_counting, ArrowOutcome, Budget};
pub use colouring::{colour_class, find_monochromatic_copy, EdgeColouring};
pub use profile::{for_each_connected_set, verify_p_profile, PProfile, ProfileViolation};
pub use separator::{find_separator, find_separator_with, SeparatorReport};

//! Exact graded commutative algebra over prime fields: Groebner bases,
//! minimal free resolutions, Ext/Tor, loci on the spectrum, and the
//! classification of resolving subcategories by grade consistent functions.

pub mod error;
pub mod fp;
pub mod monomial;
pub mod poly;
pub mod groebner;
pub mod ring;
pub mod ideal;
pub mod rmod;
pub mod gring;
pub mod module;
pub mod homalg;
pub mod stable;
pub mod spectrum;
pub mod classify;
pub mod io;
pub mod verify;

pub use error::Error;

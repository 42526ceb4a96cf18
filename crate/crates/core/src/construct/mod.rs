//! Builders for concrete groups. Every builder documents how it assigns
//! element indices; all of them put the identity at index `0`.

mod abelian;
pub mod catalog;
mod perm;
mod semidirect;

pub use abelian::{abelian, cyclic, direct_product, AbelianType};
pub use catalog::{catalog, CatalogParam};
pub use perm::{cycles_to_images, from_permutations};
pub use semidirect::{semidirect, ActionSpec, Word};

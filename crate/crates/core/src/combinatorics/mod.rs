//! Partitions, dominant weights and the symmetric-function bookkeeping that
//! every formula and oracle is built on.

mod params;
mod partition;
mod pieri;
mod symmetric;
mod tableaux;
mod weights;

pub use params::GroupParams;
pub use partition::{dominance_leq, DominantWeight, Partition};
pub use pieri::{pieri_column, pieri_row};
pub use symmetric::{e_to_m_coeff, orbit_count, partition_orbit_count};
pub use tableaux::kostka;
pub use weights::{dual, normalize, steinberg_shift, weight_transform, WeightTransform};

pub(crate) use symmetric::for_each_subset;

pub fn conjugate(mu: &Partition) -> Partition {
    mu.conjugate()
}

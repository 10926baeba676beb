//! Class groups of imaginary quadratic fields via binary quadratic forms:
//! reduction, Gauss composition, full enumeration with structure, prime
//! splitting, the ideal/form correspondence, and S-class-group quotients.

mod forms;
mod group;
mod ideals;

pub use forms::QuadForm;
pub use group::{
    class_group, class_group_with_bound, s_class_group, ClassGroup, SClassGroup,
    DEFAULT_DISC_BOUND,
};
pub use ideals::{ideal_to_class, primes_above, QuadIdeal, SplittingType};

pub(crate) use group::form_json;

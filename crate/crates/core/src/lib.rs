//! Exact computations with Matlis duality and Krull-Schmidt decompositions
//! for modules over `k[[x,y]]/(xy)` and over complete discrete valuation rings.
//!
//! ```
//! use matlis::{classify_word, parse_word, Classification};
//!
//! let hull = parse_word("x^inf Y^inf").unwrap();
//! assert_eq!(classify_word(&hull), Classification::Artinian);
//! assert_eq!(hull.inverse().to_string(), "X^inf y^inf");
//! ```

pub mod classify;
pub mod dvr;
pub mod field;
pub mod io;
pub mod ksdecomp;
pub mod linalg;
pub mod modrep;
pub mod poly;
pub mod strings;
pub mod suite;

pub use classify::{arno_split, classify_dual_compat, classify_word, split_uniqueness_check, Classification, SplitResult};
pub use dvr::{dvr_add, dvr_classify, dvr_dual, DvrCatalogObject};
pub use field::{Field, FieldSpec, Fp, Rationals, DEFAULT_PRIME};
pub use io::AnyModule;
pub use ksdecomp::{decompose, decompose_with, is_indecomposable, Certificate, DecompositionResult};
pub use linalg::Matrix;
pub use modrep::{dual, hom_dim, is_isomorphic, materialize_band, materialize_string, BandParam, ModuleRep};
pub use strings::{parse_band, parse_word, validate, PeriodicWord, StringWord};

/// Default number of random samples in Monte Carlo steps.
pub const DEFAULT_MC_BUDGET: usize = 20;

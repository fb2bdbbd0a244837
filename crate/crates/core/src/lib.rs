//! Twin-cover kernelization and colorings for the strong conflict-free
//! vertex-connection number `svcfc(G)`.
//!
//! * [`graph`]: simple graphs, distances, shortest-path enumeration.
//! * [`twin`]: true twins, twin covers, twin-clique decomposition, `G†`.
//! * [`kernel`]: the per-type reduction rule and the resulting kernels.
//! * [`coloring`]: chromatic number, the extension number `K_φ`, and the
//!   `χ(G) + |Y|` strong CFVC coloring.
//! * [`solver`]: exhaustive strong CFVC decision and optimization.
//! * [`io`] and [`generate`]: instance files, JSON output, seeded instances.
//!
//! ```
//! use svcfc_core::{kernelize_annotated, svcfc_decide, AnnotatedInstance, Graph, DEFAULT_PATH_CAP};
//!
//! let star = Graph::star(5);
//! let inst = AnnotatedInstance::new(star, 1, vec![0])?;
//! let report = kernelize_annotated(&inst)?;
//! assert_eq!(report.realized, 3);
//! let before = svcfc_decide(inst.graph(), 1, DEFAULT_PATH_CAP, None)?.answer;
//! let after = svcfc_decide(report.reduced.graph(), 1, DEFAULT_PATH_CAP, None)?.answer;
//! assert_eq!(before, after);
//! # Ok::<(), svcfc_core::Error>(())
//! ```

pub mod coloring;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod kernel;
pub mod solver;
pub mod twin;

pub use coloring::{
    chi_via_twin_cover, chromatic_number_exact, extension_number, is_proper, svcfc_upper_coloring, Coloring,
    ExtensionReport,
};
pub use error::{Error, Result};
pub use graph::{Graph, Path, ShortestPaths, VertexMap};
pub use kernel::{kernel_bound, kernelize, kernelize_annotated, AnnotatedInstance, KernelReport};
pub use solver::{is_strong_cfvc_coloring, svcfc_decide, svcfc_exact, CfvcVerdict, Decision, DEFAULT_PATH_CAP};
pub use twin::{approx_twin_cover, decompose_twin_cliques, exact_twin_cover, is_twin_cover, TwinCover};

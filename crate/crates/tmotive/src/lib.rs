//! Exact valuation engine for `h1` of Anderson t-motives of dimension 2 and
//! rank 4.
//!
//! The pipeline runs matrix valuations → coefficient valuations
//! ([`coeffs`]) → Newton polygons ([`newton`]) → minimal chains
//! ([`chains`]). The closed-form region classifiers in [`regions`] are
//! checked against it, and [`scan`] sweeps whole planes.
//! All arithmetic is exact.

pub mod chains;
pub mod coeffs;
pub mod exactval;
pub mod newton;
pub mod regions;
pub mod scan;

pub use chains::{
    classify_chain, h1_probe, minimal_sequence, minimal_sequence_from, ChainKind, ChainTrace,
    ChainVerdict, GrowthModel, Probe,
};
pub use coeffs::{coeff_valuations, head_points, uv_domain, CoeffVals, Form, MatrixOrds, UvDomain};
pub use exactval::{er_add, er_min, er_scale, ExtRat};
pub use newton::{
    leftmost_slope, lower_hull, root_valuations, NewtonPoint, NewtonPolygon, RootVal, TailTangent,
};
pub use regions::{
    case_table_35_q2, classify_34, classify_35_q2, classify_uv_34, dual_params, RegionVerdict,
    Source, H1,
};
pub use scan::{emit_csv, emit_region_map, run_scan, run_scan_with, Exec, ScanRecord, ScanSpec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("cannot parse {0:?} as an extended rational")]
    Parse(String),
    #[error("-inf is not representable")]
    NegativeInfinity,
    #[error("0 * inf is undefined")]
    ZeroTimesInfinity,
    #[error("degenerate polygon")]
    DegeneratePolygon,
    #[error("abscissa {0} is not a power of q = {1}")]
    NotQPower(u64, u64),
    #[error("tail ordinate must be finite")]
    InfiniteTail,
    #[error("outside duality chart U")]
    OutsideDualityChart,
    #[error("uncatalogued")]
    Uncatalogued,
    #[error("grid too large: {0} points, limit {1}")]
    GridTooLarge(u64, u64),
    #[error("{0}")]
    Precondition(String),
}

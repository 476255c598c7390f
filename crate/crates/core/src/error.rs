use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("triangle is degenerate (area below tolerance)")]
    DegenerateTriangle,
    #[error("input contains a non-finite coordinate")]
    NonFiniteInput,
    #[error("segment endpoints coincide")]
    ZeroLengthSegment,
    #[error("line is parallel to the plane")]
    ParallelToPlane,
    #[error("frame anchor does not lie on the plane")]
    AnchorOffPlane,
    #[error("point does not lie on the frame's plane")]
    PointOffPlane,
    #[error("vertex loops are inconsistent")]
    MalformedLoops,
    #[error("tolerances must be finite and strictly positive")]
    InvalidTolerance,
}

pub type Result<T, E = KernelError> = std::result::Result<T, E>;

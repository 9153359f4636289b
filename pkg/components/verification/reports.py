"""
Report Models - Data structures for verification results.

Plain dataclasses with to_dict() for JSON serialization. Complex numbers
are written as [re, im]; wall time lives apart from the reproducible
payload so that identical runs give identical results.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

from ..model.couplings import complex_pair


def jsonable(value: Any) -> Any:
    """Recursively convert complex numbers, numpy scalars and arrays for JSON."""
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return jsonable(value.tolist())
    if isinstance(value, (complex, np.complexfloating)):
        return complex_pair(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.bool_):
        return bool(value)
    return value


@dataclass
class VerificationReport:
    """Outcome of one residual-based check."""
    check_name: str
    parameters: Dict[str, Any]
    residual: float
    passed: bool
    tolerance: float
    measured_energy: Optional[complex] = None
    expected_energy: Optional[complex] = None
    details: Dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        """Reproducible payload; wall_time is reported through metadata()."""
        return jsonable({
            "check_name": self.check_name,
            "parameters": self.parameters,
            "residual": self.residual,
            "passed": self.passed,
            "tolerance": self.tolerance,
            "measured_energy": self.measured_energy,
            "expected_energy": self.expected_energy,
            "details": self.details,
        })

    def metadata(self) -> Dict[str, Any]:
        return {"check_name": self.check_name, "wall_time": self.wall_time}


@dataclass
class DegeneracyReport:
    """Eigenvalue cluster around a target energy versus the span of constructed states."""
    target_energy: complex
    eigenvalue_cluster: List[complex]
    span_dimension: int
    predicted_dimension: Optional[int] = None
    max_state_residual: Optional[float] = None
    hermitian: bool = True
    parameters: Dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def cluster_size(self) -> int:
        return len(self.eigenvalue_cluster)

    @property
    def passed(self) -> bool:
        if self.cluster_size < self.span_dimension:
            return False
        if self.predicted_dimension is not None:
            return self.span_dimension == self.predicted_dimension
        return True

    def to_dict(self) -> Dict[str, Any]:
        return jsonable({
            "check_name": "degeneracy",
            "target_energy": self.target_energy,
            "eigenvalue_cluster": self.eigenvalue_cluster,
            "cluster_size": self.cluster_size,
            "span_dimension": self.span_dimension,
            "predicted_dimension": self.predicted_dimension,
            "max_state_residual": self.max_state_residual,
            "hermitian": self.hermitian,
            "parameters": self.parameters,
            "passed": self.passed,
        })

    def metadata(self) -> Dict[str, Any]:
        return {"check_name": "degeneracy", "wall_time": self.wall_time}

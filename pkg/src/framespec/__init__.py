"""Parseval frames, Naimark dilation and the Hamiltonians frames generate."""

from .errors import FrameSpecError
from .frames import Frame, FrameReport, NaimarkDilation, frame_report, naimark_dilate
from .hamiltonian import CoefficientSequence, FrameHamiltonian, build, e_connect
from .linalg import EigenDecomposition, hermitian_eig

__all__ = [
    "CoefficientSequence",
    "EigenDecomposition",
    "Frame",
    "FrameHamiltonian",
    "FrameReport",
    "FrameSpecError",
    "NaimarkDilation",
    "build",
    "e_connect",
    "frame_report",
    "hermitian_eig",
    "naimark_dilate",
]

__version__ = "0.1.0"

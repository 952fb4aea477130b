from .params import ModelParams
from .grid import GridKind, RadialGrid, StateVector
from .special import LaguerreTable
from .holo import HoloSeries, System
from .darboux import DarbouxContext
from .quadrature import DiskQuadrature, QuadratureResult, QuadratureSpec, Scheme
from .geometry import ClassicalState, KahlerStructure, Observable, Trajectory
from .report import CheckResult, CheckStatus, VerificationReport

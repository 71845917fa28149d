from .golden import golden_section_maximize, golden_section_minimize
from .grid import Axis, ScanGrid, scan_grid
from .scan import Scan, Evaluation, scan, evaluate, worker_count
from .peaks import (Extremum, ExtremumKind, PeakReport, PeakSearch, find_extrema, optimal_detection_time,
                    peak_track)
from .fmax import FmaxCurve, fmax_curve, stationary_fmax
from .figures import FIGURES, figure_scans, figure_records

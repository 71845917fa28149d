from .crlb import MeasurementPlan, EstimationReport, Estimation, measurement_plan, simulate_estimation

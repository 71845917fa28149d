from .spectral import FieldModel, Coefficients, coefficients, spectral_function, tanh_ratio, tanh_ratio_derivative
from .dynamics import InitialState, EvolutionParams, BlochState, evolve, bloch_ode_oracle, bloch_arrays
from .metrology import Branch, QfiResult, SldOperator, qfi_from_bloch, qfi, qfi_array, asymptotic_qfi, sld, qfi_fd_oracle

"""Exact simulation of vector automata and the machine models they convert to and from."""
from .errors import (
    DimensionError,
    InputError,
    MachineError,
    NotApplicableError,
    ResourceLimitError,
    VecAutoError,
)
from .linalg import (
    Rational,
    RowVector,
    SquareMatrix,
    elementary_matrix,
    format_rational,
    mat_mul,
    parse_rational,
    rat,
    swap_matrix,
    vec_mat_mul,
)
from .machines import (
    CheckSpec,
    CounterMachine,
    MultiplyAutomaton,
    TuFA,
    VectorAutomaton,
    vector_automaton,
)
from .simulate import (
    RunTrace,
    accepts,
    eval_tufa,
    run,
    run_counter_machine,
    run_multiply_automaton,
    run_vector_automaton,
    run_vector_automaton_nondet,
    tufa_member,
)

__all__ = [
    "DimensionError",
    "InputError",
    "MachineError",
    "NotApplicableError",
    "ResourceLimitError",
    "VecAutoError",
    "Rational",
    "RowVector",
    "SquareMatrix",
    "elementary_matrix",
    "format_rational",
    "mat_mul",
    "parse_rational",
    "rat",
    "swap_matrix",
    "vec_mat_mul",
    "CheckSpec",
    "CounterMachine",
    "MultiplyAutomaton",
    "TuFA",
    "VectorAutomaton",
    "vector_automaton",
    "RunTrace",
    "accepts",
    "eval_tufa",
    "run",
    "run_counter_machine",
    "run_multiply_automaton",
    "run_vector_automaton",
    "run_vector_automaton_nondet",
    "tufa_member",
]

__version__ = "0.1.0"

"""Sieve of Eratosthenes as kneading sequences of the map x -> 1 - u x**2."""
from .dynamics import (bifurcation_scan, constructed_prime_gaps, itinerary, lyapunov,
                       orbit, step, topological_entropy)
from .encoding import (D, check_theme3, check_theorem4, compose, prime_gaps, prime_word,
                       primitive_period, sieve_primes)
from .gapstats import compare_histograms, histogram
from .solver import kneading_of, parameter_chain, solve_parameter, solve_superstable
from .symbolic import (Ordering, Symbol, SymbolicWord, compare, expand, is_admissible,
                       shift)

__version__ = "0.1.0"

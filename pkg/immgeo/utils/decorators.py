"""
Service decorators
Translate toolkit exceptions into (payload, exit_code) response tuples
"""
from functools import wraps
from typing import Callable

from immgeo.utils.errors import (
    DegenerateFormula, GuardExceeded, InputError, NonUnitError, VerificationFailure,
)
from immgeo.utils.logger import Logger
from immgeo.utils.response import (
    guard_exceeded_response, input_error_response, verification_failure_response,
)


def handles_toolkit_errors(f: Callable) -> Callable:
    """
    Decorator mapping toolkit exceptions to exit codes

    InputError -> 2, GuardExceeded -> 3, VerificationFailure and any
    unexpected NonUnitError or DegenerateFormula -> 1.

    Usage:
        @handles_toolkit_errors
        def run(self, ...):
            ...
    """
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except InputError as e:
            Logger.error(f"{f.__qualname__}: input error", exc_info=e)
            return input_error_response(str(e))
        except GuardExceeded as e:
            Logger.error(f"{f.__qualname__}: guard exceeded", exc_info=e)
            return guard_exceeded_response(str(e))
        except (VerificationFailure, NonUnitError, DegenerateFormula) as e:
            Logger.error(f"{f.__qualname__}: verification failure", exc_info=e)
            return verification_failure_response(str(e))
    return decorated_function

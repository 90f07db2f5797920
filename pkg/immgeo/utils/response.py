"""
Response utilities for consistent command results
Every service returns a (payload, exit_code) tuple
"""
from typing import Any, Optional

from immgeo.models import ExitCode


def success_response(data: Any = None, message: str = "Success") -> tuple:
    """
    Create a standardized success response

    Args:
        data: Response data
        message: Success message

    Returns:
        Tuple of (response_dict, 0)
    """
    response = {"message": message}
    if data is not None:
        response["data"] = data

    return response, int(ExitCode.SUCCESS)


def error_response(message: str, exit_code: ExitCode, error_code: Optional[str] = None,
                   data: Any = None) -> tuple:
    """
    Create a standardized error response

    Args:
        message: Error message
        exit_code: Process exit code
        error_code: Optional error code
        data: Optional partial results gathered before the failure

    Returns:
        Tuple of (error_dict, exit_code)
    """
    error = {"error": message}
    if error_code:
        error["code"] = error_code
    if data is not None:
        error["data"] = data

    return error, int(exit_code)


def verification_failure_response(message: str, data: Any = None) -> tuple:
    """Tuple of (error_dict, 1)"""
    return error_response(message, ExitCode.VERIFICATION_FAILURE, "VERIFICATION_FAILURE", data)


def input_error_response(message: str) -> tuple:
    """Tuple of (error_dict, 2)"""
    return error_response(message, ExitCode.INPUT_ERROR, "INPUT_ERROR")


def guard_exceeded_response(message: str) -> tuple:
    """Tuple of (error_dict, 3)"""
    return error_response(message, ExitCode.GUARD_EXCEEDED, "GUARD_EXCEEDED")

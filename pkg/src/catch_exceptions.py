from functools import wraps

from pydantic import ValidationError

from configuration import service_logger
from exceptions import DataError, UsageError

USAGE_EXIT_CODE = 1
DATA_EXIT_CODE = 2


def one_line(error: Exception) -> str:
    if isinstance(error, ValidationError):
        messages = []
        for detail in error.errors():
            location = ".".join(str(part) for part in detail["loc"])
            message = detail["msg"].removeprefix("Value error, ")
            messages.append(f"{location}: {message}" if location else message)
        return "; ".join(messages)
    return " ".join(str(error).split())


def catch_exceptions(func):
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            service_logger.debug(f"Calling command: {func.__name__}")
            result = func(*args, **kwargs)
            return result if isinstance(result, int) else 0
        except (UsageError, ValidationError) as error:
            service_logger.debug("Usage error traceback", exc_info=True)
            service_logger.error(f"Usage error: {one_line(error)}")
            return USAGE_EXIT_CODE
        except FileNotFoundError as error:
            service_logger.debug("Missing file traceback", exc_info=True)
            service_logger.error(f"Missing file: {one_line(error)}")
            return DATA_EXIT_CODE
        except DataError as error:
            service_logger.debug("Data error traceback", exc_info=True)
            service_logger.error(f"Data error: {one_line(error)}")
            return DATA_EXIT_CODE
        except Exception as error:
            service_logger.debug("Error traceback", exc_info=True)
            service_logger.error(f"Error in {func.__name__}: {type(error).__name__}: {one_line(error)}")
            return DATA_EXIT_CODE

    return wrapper

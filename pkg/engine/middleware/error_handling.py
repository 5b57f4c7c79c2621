"""
Error Handling Middleware
Categorizes failures of a subcommand, logs them with context and renders
the error document and exit code
"""
import json
import logging
import traceback
import uuid
from dataclasses import dataclass
from datetime import datetime
from typing import Any, Dict, Optional

from pydantic import ValidationError

from config import settings
from models.errors import RationalSurfaceError
from schemas import ErrorDetail, ErrorReport

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


@dataclass
class HandledError:
    document: Dict[str, Any]
    exit_code: int


class ErrorHandler:
    """Centralized error handling for subcommand invocations"""

    def __init__(self):
        self.exit_codes = {
            "usage": EXIT_USAGE,
            "validation": EXIT_DOMAIN,
            "domain": EXIT_DOMAIN,
            "contract": EXIT_DOMAIN,
            "internal": EXIT_DOMAIN,
        }

    def categorize_error(self, error: Exception) -> str:
        if isinstance(error, RationalSurfaceError):
            return error.category
        if isinstance(error, ValidationError):
            return "usage"
        return "internal"

    def log_error(
        self,
        error: Exception,
        subcommand: Optional[str],
        literal: Optional[str],
        request_id: str,
    ) -> Dict[str, Any]:
        category = self.categorize_error(error)
        error_context = {
            "request_id": request_id,
            "timestamp": datetime.now().isoformat(),
            "error_type": type(error).__name__,
            "error_message": getattr(error, "message", str(error)),
            "error_category": category,
            "subcommand": subcommand,
            "input": literal,
        }
        if isinstance(error, RationalSurfaceError) and error.context:
            error_context["context"] = error.context

        if category == "internal":
            error_context["stack_trace"] = traceback.format_exc()
            logger.error(f"Internal error: {json.dumps(error_context, default=str)}")
        else:
            logger.warning(f"Rejected input: {json.dumps(error_context, default=str)}")
        return error_context

    def handle(
        self,
        error: Exception,
        subcommand: Optional[str] = None,
        literal: Optional[str] = None,
    ) -> HandledError:
        request_id = str(uuid.uuid4())
        self.log_error(error, subcommand, literal, request_id)
        category = self.categorize_error(error)

        if isinstance(error, RationalSurfaceError):
            message = error.message
        elif category == "internal":
            message = f"internal error ({request_id})"
        else:
            message = str(error)

        detail = ErrorDetail(
            type=type(error).__name__,
            message=message,
            category=category,
            position=getattr(error, "position", None),
        )
        report = ErrorReport(error=detail, input=literal, subcommand=subcommand, version=settings.version)
        return HandledError(document=report.model_dump(), exit_code=self.exit_codes[category])


# Global error handler instance
error_handler = ErrorHandler()

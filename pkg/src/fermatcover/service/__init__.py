from .app import create_app
from .handlers import OPERATIONS, Operation

__all__ = ["OPERATIONS", "Operation", "create_app"]

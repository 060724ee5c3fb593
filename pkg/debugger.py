"""
┌─────────────────────────────────────┐
│            DEBUGGER                 │
└─────────────────────────────────────┘

Console diagnostics for the simulator.

All modules log through the debug_* helpers below. Messages go to the
"wsnsim" logger and the most recent ones are kept in memory, so the
CLI and the test suites can ask what was last reported.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Deque, Dict

from config import LOG_LEVEL

logging.basicConfig(
    level=getattr(logging, LOG_LEVEL, logging.INFO),
    format='%(levelname)s: %(message)s'
)
logger = logging.getLogger("wsnsim")

LEVELS = {
    "info": logging.INFO,
    "success": logging.INFO,
    "warning": logging.WARNING,
    "error": logging.ERROR
}


@dataclass
class DebugMessage:
    message: str
    status: str
    timestamp: datetime = field(default_factory=datetime.now)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'message': self.message,
            'status': self.status,
            'timestamp': self.timestamp.isoformat()
        }


class Debugger:
    """
     ┌─────────────────────────────────────┐
     │            DEBUGGER                 │
     └─────────────────────────────────────┘
     Logger front end with a bounded message history

     Parameters:
     - max_history: number of messages remembered
    """

    def __init__(self, max_history: int = 50):
        self.history: Deque[DebugMessage] = deque(maxlen=max_history)

    def debug(self, message: str, status: str = "info") -> None:
        """
         ┌─────────────────────────────────────┐
         │             DEBUG                   │
         └─────────────────────────────────────┘
         Log a message and remember it

         Parameters:
         - message: text to log
         - status: info, success, warning or error

         Notes:
         - Blank messages are logged but not remembered
         - Success messages are logged at INFO with a ✓ prefix
        """
        if status not in LEVELS:
            raise ValueError(f"unknown debug status: {status}")
        if message and message.strip():
            self.history.append(DebugMessage(message, status))
        text = f"✓ {message}" if status == "success" else message
        logger.log(LEVELS[status], text)

    def get_current_status(self) -> Dict[str, Any]:
        """Latest message plus the last ten remembered"""
        if not self.history:
            return {"message": "", "status": "info", "timestamp": None, "history": []}
        latest = self.history[-1].to_dict()
        latest["history"] = [m.to_dict() for m in list(self.history)[-10:]]
        return latest

    def set_level(self, level: str) -> None:
        """Change the console level (WARNING for --quiet)"""
        logger.setLevel(getattr(logging, level.upper(), logging.INFO))


debugger = Debugger()


def debug_info(message: str) -> None:
    debugger.debug(message, "info")


def debug_warning(message: str) -> None:
    debugger.debug(message, "warning")


def debug_error(message: str) -> None:
    debugger.debug(message, "error")


def debug_success(message: str) -> None:
    debugger.debug(message, "success")

import sys
from abc import ABC, abstractmethod
from config.settings import Settings

class BaseAgent(ABC):
    """
    An abstract base class for all agents in the pipeline.
    It provides a common interface and the shared status-line logger.
    """
    def __init__(self, settings: Settings):
        self.settings = settings
        self.log(f"✅ Initialized {self.__class__.__name__}")

    def log(self, message: str):
        """Status lines go to stderr, and only when VERBOSE is set, so reports on stdout stay stable."""
        if self.settings.VERBOSE:
            print(message, file=sys.stderr)

    @abstractmethod
    async def run(self, *args, **kwargs):
        """
        The main entry point for the agent's logic.
        Must be implemented by subclasses.
        """
        pass

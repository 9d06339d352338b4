from abc import ABC, abstractmethod
from argparse import Namespace
from typing import Any, Dict


class CommandControllerInterface(ABC):
    @abstractmethod
    def handle(self, args: Namespace) -> Dict[str, Any]:
        raise NotImplementedError

from abc import ABC, abstractmethod
from typing import Generic, TypeVar

RequestT = TypeVar("RequestT")
ResultT = TypeVar("ResultT")


class UseCaseInterface(ABC, Generic[RequestT, ResultT]):
    """One simulator command: a validated request in, a result object out."""

    @abstractmethod
    def execute(self, request: RequestT) -> ResultT:
        raise NotImplementedError

from typing import List, Optional, Protocol, Tuple

from ribbon_morph.internal.dto.dto import VerificationResult
from ribbon_morph.internal.dto.report import RunReport
from ribbon_morph.internal.dto.request import JobRequest, VerifyRequest


class IGeometryUseCase(Protocol):
    def geometry(self, request: JobRequest) -> RunReport: ...

    def check(self, report: RunReport) -> None: ...


class ISolveUseCase(Protocol):
    def solve(self, request: JobRequest) -> RunReport: ...

    def classify(self, request: JobRequest) -> RunReport: ...

    def mesh(self, request: JobRequest) -> RunReport: ...


class ISweepUseCase(Protocol):
    def sweep(self, request: JobRequest) -> Tuple[int, Optional[str]]: ...


class IVerifyUseCase(Protocol):
    def verify(self, request: VerifyRequest) -> List[VerificationResult]: ...

    def check(self, results: List[VerificationResult], tolerance: float) -> None: ...


class ILogger(Protocol):
    def debug(self, message: str, *args, **kwargs) -> None: ...

    def info(self, message: str, *args, **kwargs) -> None: ...

    def warn(self, message: str, *args, **kwargs) -> None: ...

    def error(self, message: str, *args, **kwargs) -> None: ...

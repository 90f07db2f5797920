"""
Base repository class with common JSON document operations
"""
import json
from pathlib import Path
from typing import Generic, Type, TypeVar, Union

from pydantic import BaseModel, ValidationError

from immgeo.utils.errors import InputError

T = TypeVar('T', bound=BaseModel)


class BaseRepository(Generic[T]):
    """
    Base repository class: one pydantic model, stored as JSON text
    """

    def __init__(self, model: Type[T]):
        self.model = model

    def parse(self, text: str, source: str = "<input>") -> T:
        """
        Parse and validate a JSON document

        Args:
            text: JSON text
            source: Name used in diagnostics

        Returns:
            Validated model instance

        Raises:
            InputError: With line/column or field diagnostics
        """
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as e:
            raise InputError(
                f"{source} is not valid JSON",
                [f"line {e.lineno}, column {e.colno}: {e.msg}"],
            ) from e
        try:
            return self.model.model_validate(raw)
        except ValidationError as e:
            diagnostics = [
                f"{'.'.join(str(part) for part in err['loc']) or '<root>'}: {err['msg']}"
                for err in e.errors()
            ]
            raise InputError(f"{source} does not match the {self.model.__name__} schema", diagnostics) from e

    def load(self, path: Union[str, Path]) -> T:
        """
        Read and validate a document from disk

        Raises:
            InputError: If the file is missing or malformed
        """
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise InputError(f"cannot read {path}", [str(e)]) from e
        return self.parse(text, str(path))

    def dumps(self, document: T) -> str:
        """Deterministic JSON text (sorted keys, two-space indent)"""
        return json.dumps(document.model_dump(mode="json"), indent=2, sort_keys=True)


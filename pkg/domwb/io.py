import json
import logging
import os

import fsspec
from fsspec.implementations.local import LocalFileSystem

from domwb.finposet import FinPoset, MalformedPosetError

_log = logging.getLogger(__name__)

JSON_INDENT = 2


def get_filesystem(path: str) -> fsspec.AbstractFileSystem | LocalFileSystem:
    protocol, _ = fsspec.core.split_protocol(path)
    return fsspec.filesystem(protocol or "file")


def check_file_exists(path: str) -> bool:
    fs = get_filesystem(path=path)
    if fs.exists(path) and fs.isfile(path):
        return True
    else:
        return False


def check_file_extension(path: str, accepted_file_extensions: list[str]) -> bool:
    _, file_extension = os.path.splitext(path)
    if file_extension.lower() in accepted_file_extensions:
        return True
    else:
        return False


def is_json(path: str) -> bool:
    return check_file_extension(path=path, accepted_file_extensions=[".json"])


def to_json(payload) -> str:
    """Serialize deterministically: sorted keys and a fixed indent."""
    return json.dumps(payload, sort_keys=True, indent=JSON_INDENT, ensure_ascii=False) + "\n"


def read_json(path: str):
    if not check_file_exists(path=path):
        e = FileNotFoundError(f"File {path} does not exist!")
        _log.error(e)
        raise e
    fs = get_filesystem(path=path)
    with fs.open(path, "r") as file:
        return json.load(file)


def write_json(path: str, payload):
    fs = get_filesystem(path=path)
    parent = os.path.dirname(path)
    if parent:
        fs.mkdirs(parent, exist_ok=True)
    with fs.open(path, "w") as file:
        file.write(to_json(payload))
    _log.info(f"Written {path}")


def poset_from_dict(document: dict) -> FinPoset:
    """
    Build a poset from ``{"elements": [...], "leq": [[...], ...]}`` or, alternatively,
    ``{"elements": [...], "covers": [[a, b], ...]}`` with covers given by element name.
    """
    if not isinstance(document, dict) or "elements" not in document:
        raise MalformedPosetError("A poset document needs an 'elements' list")
    elements = [str(element) for element in document["elements"]]
    if "leq" in document:
        return FinPoset(elements, document["leq"])
    if "covers" in document:
        position = {name: i for i, name in enumerate(elements)}
        try:
            covers = [(position[str(a)], position[str(b)]) for a, b in document["covers"]]
        except (KeyError, ValueError, TypeError) as error:
            raise MalformedPosetError(f"Invalid cover list: {error}")
        return FinPoset.from_covers(elements, covers)
    raise MalformedPosetError("A poset document needs either 'leq' or 'covers'")


def load_poset(path: str) -> FinPoset:
    return poset_from_dict(read_json(path))


def dump_poset(poset: FinPoset) -> dict:
    return dict(elements=list(poset.elements), leq=poset.leq.astype(int).tolist())


def dump_tower(tower) -> dict:
    """The enumerated levels of a tower with their element names, orders and ε/π tables."""
    levels = []
    for n, level in enumerate(tower.levels):
        entry = dict(level=n, size=level.size, poset=dump_poset(level))
        if n < len(tower.eps_maps):
            entry["eps"] = list(tower.eps_maps[n].table)
            entry["pi"] = list(tower.pi_maps[n].table)
        levels.append(entry)
    return dict(N=tower.N, tab_limit=tower.tab_limit, levels=levels)

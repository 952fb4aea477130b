from src.services.datasets.emitter import (
    EmitRequest,
    build_dataset,
    dataset_kinds,
    render,
    write_dataset,
)

__all__ = ["EmitRequest", "build_dataset", "dataset_kinds", "render", "write_dataset"]

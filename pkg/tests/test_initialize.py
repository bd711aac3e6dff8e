import pytest

from app.initialize import (
    cleanup_application,
    get_service,
    get_service_factory,
    get_tool_factory,
    get_workflow,
    initialize_application,
)


def test_accessors_after_initialization():
    factory = get_service_factory()
    assert set(factory.get_all_services()) == {
        'symbol', 'diophantine', 'report', 'graph', 'decision', 'numeric', 'witness', 'applications',
    }
    assert "analyze" in get_tool_factory().get_tool_names()
    assert get_workflow().tool_factory is get_tool_factory()
    with pytest.raises(ValueError):
        factory.get_service('vector')


def test_cleanup_and_reinitialize():
    cleanup_application()
    try:
        with pytest.raises(RuntimeError):
            get_service('symbol')
        with pytest.raises(RuntimeError):
            get_workflow()
    finally:
        initialize_application()
    assert get_service('symbol') is not None

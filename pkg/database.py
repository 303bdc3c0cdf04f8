import logging
import os
from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker
from models import Base, CompletionRecord, WitnessRecord

# Define instance path relative to the project root
INSTANCE_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'instance')
DEFAULT_DB_PATH = os.path.join(INSTANCE_PATH, 'foxdiv.db')

logger = logging.getLogger(__name__)

_engines = {}


def get_session(db_path=None):
    """
    Creates a session on the archive database at db_path.
    Tables are created on first use (idempotent).
    """
    db_path = db_path or DEFAULT_DB_PATH
    engine = _engines.get(db_path)
    if engine is None:
        directory = os.path.dirname(os.path.abspath(db_path))
        os.makedirs(directory, exist_ok=True)
        engine = create_engine(f"sqlite:///{db_path}")
        Base.metadata.create_all(engine)
        _engines[db_path] = engine
    Session = sessionmaker(bind=engine)
    return Session()


def archive_completion(payload, db_path=None):
    session = get_session(db_path)
    try:
        record = CompletionRecord(
            fingerprint=payload["fingerprint"],
            status=payload["status"],
            rules=payload["rules"],
            stats=payload["stats"],
        )
        session.add(record)
        session.commit()
        logger.info("archived completion %s (%s)", payload["fingerprint"][:12], payload["status"])
        return record.to_dict()
    except Exception:
        session.rollback()
        raise
    finally:
        session.close()


def archive_witness(fingerprint, witness, db_path=None):
    session = get_session(db_path)
    try:
        record = WitnessRecord(
            fingerprint=fingerprint,
            beta=witness["beta"],
            A=witness["A"],
            B=witness["B"],
            product_zero=witness["product_zero"],
            nontrivial=witness["nontrivial"],
        )
        session.add(record)
        session.commit()
        return record.to_dict()
    except Exception:
        session.rollback()
        raise
    finally:
        session.close()


def latest_completion(fingerprint, db_path=None):
    session = get_session(db_path)
    try:
        record = (
            session.query(CompletionRecord)
            .filter_by(fingerprint=fingerprint)
            .order_by(CompletionRecord.id.desc())
            .first()
        )
        return record.to_dict() if record else None
    finally:
        session.close()


def witnesses_for(fingerprint, db_path=None):
    session = get_session(db_path)
    try:
        records = session.query(WitnessRecord).filter_by(fingerprint=fingerprint).order_by(WitnessRecord.id).all()
        return [r.to_dict() for r in records]
    finally:
        session.close()

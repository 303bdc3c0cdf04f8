import datetime
from sqlalchemy import Column, Integer, String, Boolean, DateTime, JSON
from sqlalchemy.orm import declarative_base

Base = declarative_base()


def _utcnow():
    return datetime.datetime.now(datetime.timezone.utc)


class ArchiveMixin:
    def to_dict(self):
        result = {}
        for c in self.__table__.columns:
            value = getattr(self, c.name)
            if isinstance(value, (datetime.datetime, datetime.date)):
                result[c.name] = value.isoformat()
            else:
                result[c.name] = value
        return result


class CompletionRecord(ArchiveMixin, Base):
    __tablename__ = 'completion_record'
    id = Column(Integer, primary_key=True)
    fingerprint = Column(String(64), nullable=False, index=True)
    status = Column(String(20), nullable=False)
    rules = Column(JSON)
    stats = Column(JSON)
    created_at = Column(DateTime, default=_utcnow)


class WitnessRecord(ArchiveMixin, Base):
    __tablename__ = 'witness_record'
    id = Column(Integer, primary_key=True)
    fingerprint = Column(String(64), nullable=False, index=True)
    beta = Column(JSON)
    A = Column(String(2000))
    B = Column(String(2000))
    product_zero = Column(Boolean, nullable=False)
    nontrivial = Column(Boolean, nullable=False)
    created_at = Column(DateTime, default=_utcnow)

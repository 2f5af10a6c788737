import pytest

from corpus.entries import DictEntry, Gender, GenderCategory, Source
from corpus.name_db import build_db
from pipeline.users import UserProfile, UserRecord


def census(name, male=0.0, female=0.0):
    category = GenderCategory.MALE if male >= female else GenderCategory.FEMALE
    return DictEntry(name, Source.CENSUS, category, male=male, female=female)


def namdict(name, category):
    return DictEntry.from_category(name, Source.NAMDICT, GenderCategory(category))


@pytest.fixture
def toy_entries():
    return [
        census("JOHN", male=3.271),
        census("JOHN", female=0.013),
        census("MARY", female=2.629),
        census("KIM", male=0.004),
        census("KIM", female=0.115),
        namdict("Andrea", "mostly_female"),
        namdict("Andrea", "male"),
        namdict("Jürgen", "male"),
        namdict("Marie", "female_if_first_part"),
        namdict("Sasha", "unisex"),
        namdict("Anna+Lena", "female"),
    ]


@pytest.fixture
def toy_db(toy_entries):
    return build_db(toy_entries)


@pytest.fixture
def make_user():
    def factory(user_id, name, tweets=(), gender=None, **profile):
        g = Gender(gender) if gender else None
        return UserRecord(user_id, name, tuple(tweets), UserProfile(**profile), g)
    return factory

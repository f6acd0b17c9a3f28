"""Regenerate the packaged fixture corpus (reference manifest + candidates).

The reference sets and candidate sentences are transcribed verbatim from the
published sample tables. Running this script rewrites the two JSONL files
under src/scenedesc/data/fixtures/ and validates the manifest through the
strict loader.
"""

import json
from pathlib import Path

from scenedesc.dataset import (
    DatasetManifest,
    ImageRecord,
    RecordMeta,
    export_manifest,
    load_manifest,
)

FIXTURES = Path(__file__).resolve().parent.parent / "src" / "scenedesc" / "data" / "fixtures"

REFERENCES = {
    "seen_bdd_001": {
        "meta": ("clear", "daytime", ["residential", "multi-lane"]),
        "descriptions": [
            "It is clear daytime.",
            "It is a multi-lane street.",
            "A white car is driving in the ego lane nearby.",
            "It is a residential area.",
            "A crosswalk is ahead, and 1 white car is driving in the ego lane nearby.",
            "No pedestrians are on the crosswalk.",
            "3 people are on the right sidewalk, and the right lane is a bus lane.",
            "The right lane is a bus lane, and there is a bus in the right lane.",
            "Many cars are on the street, and the right lane is a bus lane.",
            "It is clear daytime, it is a multi-lane street, a crosswalk is ahead, "
            "one white car is driving in the ego lane nearby, no pedestrians are on the crosswalk, "
            "many cars are on the street, and it is a residential area.",
        ],
    },
    "seen_bdd_002": {
        "meta": ("clear", "nighttime", ["two-way", "intersection"]),
        "descriptions": [
            "It is clear nighttime.",
            "It is a two-way street.",
            "A black SUV is braking in front with its brake lights on.",
            "1 black SUV is braking in front with its brake lights on.",
            "Many pedestrians are walking on the right sidewalk.",
            "An intersection is ahead.",
            "The traffic light is green at the intersection.",
            "The ego lane is the leftmost lane, and 1 black SUV is braking in front with its brake lights on.",
            "It is clear nighttime, it is a two-way street, one black SUV is braking in front "
            "with its brake lights on, the ego lane is the leftmost lane, an intersection is ahead, "
            "and the traffic light is green at the intersection.",
            "It is clear nighttime, it is a two-way street, and 1 black SUV is braking in front "
            "with its brake lights on.",
        ],
    },
    "seen_bdd_003": {
        "meta": ("snowy", "daytime", ["two-lane", "school-zone"]),
        "descriptions": [
            "It is daytime, and the street is wet and slippery with snow.",
            "It is a two-lane street, and a crosswalk is ahead in front.",
            "There is snow on the street, and the street is wet and slippery with snow.",
            "A yellow taxi is driving in the ego lane some distance ahead.",
            "2 cars are parked on the left side of the road.",
            "A pedestrian is on the right side of the road.",
            "A bus is braking in the right lane with its brake lights on.",
            "The ego lane is the leftmost lane, and a crosswalk is ahead in front.",
            "A [SCHOOL ZONE] sign is on the right side of the street ahead.",
            "It is clear daytime, the street is wet and slippery with snow, it is a two-lane street, "
            "a taxi is driving in the ego lane ahead, 2 cars are parked on the left side of the road, "
            "a pedestrian is on the right side of the road, 1 bus is braking in the right lane with "
            "its brake lights on, and there is a [SCHOOL ZONE] sign on the right side of the street ahead.",
        ],
    },
    "seen_bdd_004": {
        "meta": ("clear", "daytime", ["two-way", "congestion"]),
        "descriptions": [
            "It is clear daytime.",
            "It is a two-way street.",
            "There is traffic congestion ahead.",
            "1 black car with its brake lights on is braking nearby in front.",
            "One black truck with its brake lights on is braking in the right lane.",
            "Many vehicles with their brake lights on are on the road.",
            "A traffic light is at intersection in front, and the traffic light is green in front.",
            "The traffic light is green in front.",
            "2 black cars are in the left lane in the opposite direction.",
            "It is clear daytime, there is traffic congestion ahead, many vehicles are braking with "
            "their brake lights on, the traffic light is green at intersection in front, 1 black car "
            "with its brake lights on is braking nearby in front in the ego lane, One black truck with "
            "its brake lights on is braking in the right lane, and 2 black cars are in the left lane "
            "in the opposite direction.",
        ],
    },
    "seen_bdd_005": {
        "meta": ("rainy", "daytime", ["one-way", "narrow"]),
        "descriptions": [
            "It is daytime, and it is raining.",
            "The road is wet and slippery because of the rain.",
            "It is a one-way, narrow street.",
            "It is a one-way, narrow street, and the street is wet and slippery because of the rain.",
            "1 vehicle is braking in the ego lane some distance ahead with its taillights and brake lights on.",
            "Many vehicles are parked on both sides of the street.",
            "It is raining, and the road is wet and slippery because of the rain.",
            "The road is wet and slippery because of the rain, and a vehicle is braking in the ego "
            "lane some distance ahead with its taillights and brake lights on.",
            "It is a one-way, narrow street, the street is wet and slippery because of the rain, "
            "and Many vehicles are parked on both sides of the street.",
            "It is daytime, it is raining, It is a one-way, narrow street, the street is wet and "
            "slippery because of the rain, Many vehicles are parked on both sides of the street, "
            "and a vehicle is braking in the ego lane some distance ahead with its taillights and "
            "brake lights on.",
        ],
    },
}

# Generated sentences from the first comparison stage, one entry per
# encoder/decoder pair and evaluation image.
CANDIDATES = {
    "vgg16-lstm": [
        "it is clear daytime , many cars are on the right , many cars are parked on both sides "
        "of the street , and a crosswalk is ahead nearby .",
        "it is clear nighttime , it is a two - way street , one black suv is braking in front with "
        "its brake lights on , the ego lane is the leftmost lane , and 1 black car is braking in "
        "front in the ego lane with its brake lights on .",
        "a yellow taxi is driving in the ego lane with its left turn signal flashing , the ego lane "
        "is the rightmost lane , and a car is driving in the left lane ahead .",
        "it is a two - lane street .",
        "it is raining , the street is wet and slippery because of the rain , and many vehicles are "
        "parked on both sides of the street .",
    ],
    "vgg16-xlstm": [
        "it is clear daytime .",
        "it is clear nighttime , it is a two - way street , and 1 black suv is braking in front "
        "with its brake lights on .",
        "a [ school zone ] sign is on the right side of the street .",
        "it is clear daytime , there is traffic congestion ahead , many vehicles are braking with "
        "their brake lights on , 1 black car with its brake lights on is braking in the ego lane in "
        "front , 1 blue van is braking with its brake lights on in front is braking with its brake "
        "lights on in front nearby , and the traffic light is red .",
        "it is a one - way , narrow street , and the street is wet and slippery because of the rain .",
    ],
    "resnet50-lstm": [
        "it is a residential area , the traffic light is green , and 1 white car and 1 black car "
        "are driving in the ego lane nearby .",
        "it is a two - way street , and 1 black suv is driving in front in the ego lane straight ahead .",
        "a bus is braking in the right lane with its brake lights on , and 1 person is walking on "
        "the sidewalk on the right .",
        "it is clear daytime , there is traffic congestion ahead , many vehicles are braking with "
        "their brake lights on , the traffic light is red at intersection , 1 black car with its "
        "brake lights on is braking in the ego lane in front at a short distance away , and there "
        "is a [ direction ] sign with green background on the left side of the street .",
        "it is raining , and the road is wet and slippery because of the rain .",
    ],
    "resnet50-xlstm": [
        "it is a multi - lane street .",
        "it is clear nighttime , it is a two - way street , one black suv is braking in front with "
        "its brake lights on , the ego lane is the leftmost lane , an intersection is ahead , the "
        "traffic light is green at the intersection , one silver car is driving in the ego lane , "
        "the street has multiple lanes , there is a white ahead , the right lane is clear , and "
        "several vehicles are parked on both sides of the street some distance ahead .",
        "a pedestrian is on the right side of the road .",
        "it is clear daytime , it is a two - way street , the traffic light is green , a [ one way ] "
        "sign pointing straight , many vehicles are parked on both sides of the street , the road "
        "has 2 lanes , the ego lane is the leftmost lane , 1 car is driving in the ego lane in "
        "front , there is a crosswalk in front , the traffic lights are green , many vehicles are "
        "parked on both sides of the street , one [ on the street , and there is a [ no left turn ] "
        "sign on the left side of the street some distance ahead , there are 2 [ on the right side "
        "of the street some distance ahead , and the traffic light is green .",
        "it is a one - way , narrow street , and the street is wet and slippery because of the rain .",
    ],
    "detr-lstm": [
        "it is a residential area .",
        "it is clear nighttime , it is an intersection , and 1 black suv is braking in the ego lane "
        "in front with its brake lights on .",
        "it is clear daytime , and the ego lane is the leftmost lane .",
        "it is traffic congestion .",
        "it is raining , and the road is wet and slippery because of the rain .",
    ],
    "detr-xlstm": [
        "it is a multi - lane street .",
        "it is clear nighttime , it is a two - way street , one black suv is braking in front with "
        "its brake lights on , many vehicles is parked on the right side of the street , and there "
        "is a [ school zone ] sign on the right side of the street .",
        "a pedestrian is on the right side of there is crossing the right sidewalk .",
        "it is clear daytime .",
        "it is daytime , it is raining , it is a one - way , narrow street , the road is wet and "
        "slippery because of the rain , many vehicles are parked on both sides of the street , and "
        "a vehicle is braking in the ego lane some distance ahead with its taillights and brake "
        "lights on .",
    ],
    "rtdetr-lstm": [
        "the ego lane is the rightmost lane .",
        "the ego lane is the rightmost lane .",
        "the ego lane is the rightmost lane .",
        "the ego lane is the rightmost lane .",
        "the ego lane is the rightmost lane .",
    ],
    "rtdetr-xlstm": [
        "it is a narrow , one - way street , 1 white truck is parked in front of at on because "
        "brake lights on the left side , 1 pedestrian is on the opposite lane , and 1 pedestrian "
        "is on the right sidewalk .",
        "it is a narrow one black cliff pedestrian an unpaved ] signs are in front , and there are "
        "in front of the and there are in front .",
        "it is an intersection .",
        "it is an intersection .",
        "it is an intersection .",
    ],
}


def build_manifest() -> DatasetManifest:
    records = []
    for image_id, payload in REFERENCES.items():
        weather, lighting, tags = payload["meta"]
        records.append(
            ImageRecord(
                id=image_id,
                image=f"images/{image_id}.jpg",
                descriptions=tuple(payload["descriptions"]),
                meta=RecordMeta(weather, lighting, tuple(tags)),
                category="seen",
                version=1,
            )
        )
    for i in range(1, 6):
        records.append(
            ImageRecord(
                id=f"unseen_bdd_{i:03d}",
                image=f"images/unseen_bdd_{i:03d}.jpg",
                descriptions=(),
                meta=RecordMeta(),
                category="unseen",
                version=1,
            )
        )
    for i in range(1, 6):
        records.append(
            ImageRecord(
                id=f"flickr8k_{i:03d}",
                image=f"images/flickr8k_{i:03d}.jpg",
                descriptions=(),
                meta=RecordMeta(),
                category="out_of_domain",
                version=1,
            )
        )
    return DatasetManifest(tuple(records))


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    manifest_path = FIXTURES / "seen_bdd.jsonl"
    export_manifest(build_manifest(), manifest_path)
    load_manifest(manifest_path, strict=True)  # must round-trip through strict validation

    candidates_path = FIXTURES / "stage1_candidates.jsonl"
    with open(candidates_path, "w", encoding="utf-8") as handle:
        for model, texts in CANDIDATES.items():
            for i, text in enumerate(texts, 1):
                record = {
                    "id": f"{model}-{i:03d}",
                    "image_id": f"seen_bdd_{i:03d}",
                    "text": text,
                }
                handle.write(json.dumps(record, sort_keys=True, ensure_ascii=False) + "\n")
    print(f"wrote {manifest_path}")
    print(f"wrote {candidates_path}")


if __name__ == "__main__":
    main()

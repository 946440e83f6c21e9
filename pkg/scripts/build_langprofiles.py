"""Build the bundled language profiles from seed corpora.

Run from the repo root after editing a seed:
    python scripts/build_langprofiles.py
"""

import json
from pathlib import Path

import sys

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from factcheck.service.language import text_trigrams  # noqa: E402

OUT_DIR = Path(__file__).resolve().parents[1] / "src/factcheck/data/langprofiles"
TOP_TRIGRAMS = 800

SEEDS = {
    "en": """
The city council approved the new library budget after a long debate on Tuesday evening.
Researchers found that the river carries far more sediment during the spring than anyone expected.
She walked along the harbour every morning before work, watching the fishing boats come in.
The committee will publish its findings next month, together with the raw survey data.
Most of the houses on this street were built in the nineteen twenties and have small gardens.
When the storm finally passed, the farmers went out to check the fences and the young trees.
The museum's new wing holds a collection of early photographs from the northern villages.
He explained that the delay was caused by a shortage of spare parts rather than bad planning.
Children from the nearby school visit the old mill every autumn to learn how flour was made.
The report argues that better insulation would cut heating costs for most older buildings.
Nobody on the team had seen anything quite like it, and the results took weeks to confirm.
The bakery on the corner still uses the same wood-fired oven it installed sixty years ago.
""",
    "no": """
Kommunen vedtok det nye budsjettet for biblioteket etter en lang debatt tirsdag kveld.
Forskerne fant at elva fører med seg mye mer sand og grus om våren enn noen hadde ventet.
Hun gikk langs havna hver morgen før jobb og så på fiskebåtene som kom inn.
Utvalget skal legge fram rapporten sin neste måned sammen med tallene fra undersøkelsen.
De fleste husene i denne gata ble bygget på nittentjuetallet og har små hager.
Da uværet endelig ga seg, gikk bøndene ut for å se til gjerdene og de unge trærne.
Den nye fløyen på museet rommer en samling tidlige fotografier fra bygdene i nord.
Han forklarte at forsinkelsen skyldtes mangel på deler og ikke dårlig planlegging.
Barna fra skolen i nærheten besøker den gamle mølla hver høst for å lære hvordan mel ble til.
Rapporten hevder at bedre isolasjon ville kutte fyringskostnadene i de fleste eldre bygg.
Ingen på laget hadde sett noe lignende, og det tok flere uker å få bekreftet resultatene.
Bakeriet på hjørnet bruker fortsatt den samme vedfyrte ovnen som ble satt inn for seksti år siden.
Norge har en lang kyst med dype fjorder, høye fjell og mange små øyer langs hele landet.
Innbyggerne i byen er stolte av det gamle torget og de smale gatene ned mot sjøen.
""",
    "da": """
Kommunen vedtog det nye budget for biblioteket efter en lang debat tirsdag aften.
Forskerne fandt, at åen fører langt mere sand med sig om foråret, end nogen havde ventet.
Hun gik langs havnen hver morgen før arbejde og så på fiskerbådene, der kom ind.
Udvalget offentliggør sin rapport i næste måned sammen med tallene fra undersøgelsen.
De fleste huse på denne vej blev bygget i nittentyverne og har små haver.
Da uvejret endelig drev over, gik bønderne ud for at se til hegnene og de unge træer.
Museets nye fløj rummer en samling tidlige fotografier fra landsbyerne mod nord.
Han forklarede, at forsinkelsen skyldtes mangel på reservedele og ikke dårlig planlægning.
Børnene fra skolen i nærheden besøger den gamle mølle hvert efterår for at lære, hvordan mel blev lavet.
Rapporten hævder, at bedre isolering ville skære varmeudgifterne ned i de fleste ældre bygninger.
Ingen på holdet havde set noget lignende, og det tog uger at bekræfte resultaterne.
Bageriet på hjørnet bruger stadig den samme brændefyrede ovn, som blev sat ind for tres år siden.
""",
    "de": """
Der Stadtrat hat den neuen Haushalt für die Bibliothek nach einer langen Debatte am Dienstagabend beschlossen.
Die Forscher stellten fest, dass der Fluss im Frühjahr viel mehr Geschiebe führt als erwartet.
Sie ging jeden Morgen vor der Arbeit am Hafen entlang und sah den Fischerbooten zu.
Der Ausschuss wird seinen Bericht nächsten Monat zusammen mit den Rohdaten veröffentlichen.
Die meisten Häuser in dieser Straße wurden in den zwanziger Jahren gebaut und haben kleine Gärten.
Als das Unwetter endlich vorüber war, gingen die Bauern hinaus, um die Zäune und die jungen Bäume zu prüfen.
Der neue Flügel des Museums beherbergt eine Sammlung früher Fotografien aus den nördlichen Dörfern.
Er erklärte, dass die Verzögerung an fehlenden Ersatzteilen lag und nicht an schlechter Planung.
Die Kinder der nahen Schule besuchen jeden Herbst die alte Mühle, um zu lernen, wie Mehl gemacht wurde.
Der Bericht argumentiert, dass eine bessere Dämmung die Heizkosten der meisten älteren Gebäude senken würde.
Niemand im Team hatte so etwas je gesehen, und es dauerte Wochen, die Ergebnisse zu bestätigen.
Die Bäckerei an der Ecke benutzt noch immer denselben Holzofen, den sie vor sechzig Jahren eingebaut hat.
""",
    "fr": """
Le conseil municipal a approuvé le nouveau budget de la bibliothèque après un long débat mardi soir.
Les chercheurs ont constaté que la rivière transporte bien plus de sédiments au printemps que prévu.
Elle marchait le long du port chaque matin avant le travail, regardant rentrer les bateaux de pêche.
La commission publiera son rapport le mois prochain, avec les données brutes de l'enquête.
La plupart des maisons de cette rue ont été construites dans les années vingt et ont de petits jardins.
Quand la tempête est enfin passée, les fermiers sont sortis vérifier les clôtures et les jeunes arbres.
La nouvelle aile du musée abrite une collection de photographies anciennes des villages du nord.
Il a expliqué que le retard venait d'un manque de pièces détachées et non d'une mauvaise organisation.
Les enfants de l'école voisine visitent le vieux moulin chaque automne pour apprendre comment on faisait la farine.
Le rapport soutient qu'une meilleure isolation réduirait les frais de chauffage de la plupart des bâtiments anciens.
Personne dans l'équipe n'avait rien vu de semblable, et il a fallu des semaines pour confirmer les résultats.
La boulangerie du coin utilise toujours le même four à bois installé il y a soixante ans.
""",
    "es": """
El ayuntamiento aprobó el nuevo presupuesto de la biblioteca tras un largo debate el martes por la noche.
Los investigadores descubrieron que el río arrastra mucho más sedimento en primavera de lo esperado.
Ella caminaba por el puerto cada mañana antes del trabajo, mirando entrar los barcos de pesca.
La comisión publicará su informe el mes que viene, junto con los datos brutos de la encuesta.
La mayoría de las casas de esta calle se construyeron en los años veinte y tienen jardines pequeños.
Cuando por fin pasó la tormenta, los agricultores salieron a revisar las cercas y los árboles jóvenes.
La nueva ala del museo alberga una colección de fotografías antiguas de los pueblos del norte.
Explicó que el retraso se debía a la falta de repuestos y no a una mala planificación.
Los niños de la escuela cercana visitan el viejo molino cada otoño para aprender cómo se hacía la harina.
El informe sostiene que un mejor aislamiento reduciría los gastos de calefacción de la mayoría de los edificios antiguos.
Nadie en el equipo había visto nada parecido, y llevó semanas confirmar los resultados.
La panadería de la esquina sigue usando el mismo horno de leña que instaló hace sesenta años.
""",
}


def main() -> None:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    for language, seed in SEEDS.items():
        counts = text_trigrams(seed)
        top = dict(sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:TOP_TRIGRAMS])
        out = OUT_DIR / f"{language}.json"
        out.write_text(
            json.dumps({"language": language, "trigrams": top}, ensure_ascii=False, indent=1),
            encoding="utf-8",
        )
        print(f"{out.name}: {len(top)} trigrams")


if __name__ == "__main__":
    main()

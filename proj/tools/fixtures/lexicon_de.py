# Copyright 2026 The valgen Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""German entries, ontology and frame descriptions."""

from morph_de import noun as N, adjective as A

NOUNS = [
    # heads
    N("Flucht", "f", plural="Fluchten"),
    N("Reise", "f", plural="Reisen"),
    N("Umzug", "m", "Umzugs", "Umzüge"),
    N("Anwesenheit", "f", plural="Anwesenheiten"),
    N("Abwesenheit", "f", plural="Abwesenheiten"),
    N("Aufenthalt", "m", "Aufenthalts", "Aufenthalte"),
    N("Gespräch", "n", "Gesprächs", "Gespräche"),
    N("Diskussion", "f", plural="Diskussionen"),
    N("Frage", "f", plural="Fragen"),
    N("Antwort", "f", plural="Antworten", link=""),
    N("Text", "m", "Textes", "Texte"),
    N("Video", "n", "Videos", "Videos"),
    N("Tod", "m", "Todes", "Tode"),
    N("Zunahme", "f", plural="Zunahmen"),
    N("Schmerz", "m", "Schmerzes", "Schmerzen"),
    N("Liebe", "f", plural="Lieben"),
    N("Geruch", "m", "Geruchs", "Gerüche"),
    N("Geschmack", "m", "Geschmacks", "Geschmäcker"),
    N("Farbe", "f", plural="Farben"),
    N("Breite", "f", plural="Breiten"),
    # people: professions
    N("Architekt", "m", "Architekten", "Architekten", weak=True),
    N("Autor", "m", "Autors", "Autoren"),
    N("Autorin", "f", plural="Autorinnen"),
    N("Dichter", "m", "Dichters", "Dichter"),
    N("Hersteller", "m", "Herstellers", "Hersteller"),
    N("Journalistin", "f", plural="Journalistinnen"),
    N("Künstler", "m", "Künstlers", "Künstler"),
    N("Philosoph", "m", "Philosophen", "Philosophen", weak=True),
    N("Sänger", "m", "Sängers", "Sänger"),
    N("Schriftsteller", "m", "Schriftstellers", "Schriftsteller"),
    N("Detektiv", "m", "Detektivs", "Detektive"),
    N("Akademiker", "m", "Akademikers", "Akademiker"),
    N("Akademikerin", "f", plural="Akademikerinnen"),
    N("Dozent", "m", "Dozenten", "Dozenten", weak=True),
    N("Gastprofessor", "m", "Gastprofessors", "Gastprofessoren"),
    N("Erzieher", "m", "Erziehers", "Erzieher"),
    N("Englischlehrer", "m", "Englischlehrers", "Englischlehrer"),
    N("Englischlehrerin", "f", plural="Englischlehrerinnen"),
    N("Lehrer", "m", "Lehrers", "Lehrer"),
    N("Schüler", "m", "Schülers", "Schüler"),
    N("Teilnehmer", "m", "Teilnehmers", "Teilnehmer"),
    N("Tourist", "m", "Touristen", "Touristen", weak=True),
    N("Flüchtling", "m", "Flüchtlings", "Flüchtlinge"),
    N("Patient", "m", "Patienten", "Patienten", weak=True),
    N("Kind", "n", "Kindes", "Kinder"),
    N("Mensch", "m", "Menschen", "Menschen", weak=True),
    N("Experte", "m", "Experten", "Experten", weak=True),
    N("Bürger", "m", "Bürgers", "Bürger"),
    N("Politiker", "m", "Politikers", "Politiker"),
    # organisations
    N("Verlag", "m", "Verlags", "Verlage", link="s"),
    N("Konzern", "m", "Konzerns", "Konzerne"),
    N("Firma", "f", plural="Firmen"),
    N("Uni", "f", plural="Unis"),
    N("Hochschule", "f", plural="Hochschulen"),
    N("Universität", "f", plural="Universitäten"),
    N("EU", "f", plural_less=True),
    N("Nato", "f", plural_less=True),
    N("Partei", "f", plural="Parteien"),
    N("Polizei", "f", plural="Polizeien"),
    N("Armee", "f", plural="Armeen"),
    N("Marine", "f", plural="Marinen"),
    N("Bundesregierung", "f", plural="Bundesregierungen", link="s"),
    N("Landesregierung", "f", plural="Landesregierungen", link="s"),
    N("Regierung", "f", plural="Regierungen", link="s"),
    N("Senat", "m", "Senats", "Senate", link="s"),
    N("Verwaltung", "f", plural="Verwaltungen", link="s"),
    N("Stadtverwaltung", "f", plural="Stadtverwaltungen", link="s"),
    N("Kommission", "f", plural="Kommissionen", link="s"),
    N("Verein", "m", "Vereins", "Vereine"),
    N("Klub", "m", "Klubs", "Klubs"),
    N("Chor", "m", "Chors", "Chöre"),
    # family, ideology, office, belief, names, collectives
    N("Cousine", "f", plural="Cousinen"),
    N("Mutter", "f", plural="Mütter"),
    N("Vater", "m", "Vaters", "Väter"),
    N("Familie", "f", plural="Familien"),
    N("Faschist", "m", "Faschisten", "Faschisten", weak=True),
    N("Sozialist", "m", "Sozialisten", "Sozialisten", weak=True),
    N("Kommunist", "m", "Kommunisten", "Kommunisten", weak=True),
    N("Geschäftsführerin", "f", plural="Geschäftsführerinnen"),
    N("Papst", "m", "Papstes", "Päpste"),
    N("Präsident", "m", "Präsidenten", "Präsidenten", weak=True),
    N("Agnostiker", "m", "Agnostikers", "Agnostiker"),
    N("Katholik", "m", "Katholiken", "Katholiken", weak=True),
    N("Atheist", "m", "Atheisten", "Atheisten", weak=True),
    N("Paulus", "m", plural_less=True),
    N("Mia", "f", "Mias", "Mias"),
    N("Lena", "f", "Lenas", "Lenas"),
    N("Band", "f", plural="Bands"),
    N("Jury", "f", plural="Jurys"),
    N("Gruppe", "f", plural="Gruppen"),
    N("Bevölkerung", "f", plural="Bevölkerungen"),
    # works and media
    N("Lied", "n", "Liedes", "Lieder"),
    N("Bibel", "f", plural="Bibeln"),
    N("Buch", "n", "Buches", "Bücher"),
    N("Song", "m", "Songs", "Songs"),
    N("Testament", "n", "Testaments", "Testamente"),
    N("Petition", "f", plural="Petitionen"),
    N("Seite", "f", plural="Seiten"),
    N("Artikel", "m", "Artikels", "Artikel"),
    N("Mail", "f", plural="Mails"),
    N("Anzeige", "f", plural="Anzeigen"),
    N("Rede", "f", plural="Reden"),
    N("Schrift", "f", plural="Schriften"),
    N("Urkunde", "f", plural="Urkunden"),
    N("E-Mail", "f", plural="E-Mails"),
    N("Webseite", "f", plural="Webseiten"),
    N("Evangelium", "n", "Evangeliums", "Evangelien"),
    N("Oper", "f", plural="Opern"),
    # themes and communication
    N("Gesetz", "n", "Gesetzes", "Gesetze"),
    N("Versuchung", "f", plural="Versuchungen"),
    N("Hochzeit", "f", plural="Hochzeiten"),
    N("Thema", "n", "Themas", "Themen"),
    N("Zukunft", "f", plural="Zukünfte"),
    N("Sinn", "m", "Sinnes", "Sinne"),
    N("Rolle", "f", plural="Rollen"),
    N("Problem", "n", "Problems", "Probleme"),
    N("Einführung", "f", plural="Einführungen"),
    N("Umgang", "m", "Umgangs", "Umgänge"),
    N("Inhalt", "m", "Inhalts", "Inhalte"),
    N("Möglichkeit", "f", plural="Möglichkeiten"),
    N("Vertrag", "m", "Vertrags", "Verträge"),
    N("Anfrage", "f", plural="Anfragen"),
    N("Bitte", "f", plural="Bitten"),
    N("Beschwerde", "f", plural="Beschwerden"),
    N("Kritik", "f", plural="Kritiken"),
    # text-type compound modifiers
    N("Bemerkung", "f", plural="Bemerkungen", link="s"),
    N("Lösung", "f", plural="Lösungen", link="s"),
    N("Erklärung", "f", plural="Erklärungen", link="s"),
    N("Ankündigung", "f", plural="Ankündigungen", link="s"),
    N("Beschreibung", "f", plural="Beschreibungen", link="s"),
    N("Predigt", "f", plural="Predigten", link=""),
    N("Abschied", "m", "Abschieds", "Abschiede", link="s"),
    N("Presse", "f", plural="Pressen", link=""),
    # body parts
    N("Kopf", "m", "Kopfes", "Köpfe", link=""),
    N("Rücken", "m", "Rückens", "Rücken", link=""),
    N("Bauch", "m", "Bauches", "Bäuche", link=""),
    N("Auge", "n", "Auges", "Augen", link="n"),
    N("Haar", "n", "Haares", "Haare", link=""),
    N("Hand", "f", plural="Hände", link=""),
    N("Fuß", "m", "Fußes", "Füße", link=""),
    N("Zahn", "m", "Zahnes", "Zähne", link=""),
    N("Hals", "m", "Halses", "Hälse", link=""),
    N("Ohr", "n", "Ohres", "Ohren", link="en"),
    N("Gesicht", "n", "Gesichts", "Gesichter", link="s"),
    N("Muskel", "m", "Muskels", "Muskeln", link=""),
    N("Knochen", "m", "Knochens", "Knochen", link=""),
    N("Gelenk", "n", "Gelenks", "Gelenke", link=""),
    N("Haut", "f", plural="Häute", link=""),
    N("Eierstock", "m", "Eierstocks", "Eierstöcke", link=""),
    N("Herz", "n", "Herzens", "Herzen", link="",
      overrides={"dat.sg": "Herzen", "acc.sg": "Herz"}),
    N("Magen", "m", "Magens", "Mägen", link=""),
    N("Leber", "f", plural="Lebern", link=""),
    N("Niere", "f", plural="Nieren", link="n"),
    # things, places, nature, food
    N("Lippenstift", "m", "Lippenstifts", "Lippenstifte"),
    N("Nagellack", "m", "Nagellacks", "Nagellacke"),
    N("Kleid", "n", "Kleides", "Kleider"),
    N("Himmel", "m", "Himmels", "Himmel"),
    N("Meer", "n", "Meeres", "Meere"),
    N("Blatt", "n", "Blattes", "Blätter"),
    N("Blume", "f", plural="Blumen"),
    N("Rose", "f", plural="Rosen"),
    N("Lavendel", "m", "Lavendels", "Lavendel"),
    N("Wand", "f", plural="Wände"),
    N("Haus", "n", "Hauses", "Häuser"),
    N("Zimmer", "n", "Zimmers", "Zimmer"),
    N("Küche", "f", plural="Küchen"),
    N("Raum", "m", "Raumes", "Räume"),
    N("Keller", "m", "Kellers", "Keller"),
    N("Wein", "m", "Weins", "Weine"),
    N("Kaffee", "m", "Kaffees", "Kaffees"),
    N("Bier", "n", "Biers", "Biere"),
    N("Tee", "m", "Tees", "Tees"),
    N("Brot", "n", "Brotes", "Brote"),
    N("Suppe", "f", plural="Suppen"),
    N("Käse", "m", "Käses", "Käse"),
    N("Straße", "f", plural="Straßen"),
    N("Fluss", "m", "Flusses", "Flüsse"),
    N("Weg", "m", "Weges", "Wege"),
    N("Brücke", "f", plural="Brücken"),
    N("Tür", "f", plural="Türen"),
    N("Zahl", "f", plural="Zahlen"),
    N("Temperatur", "f", plural="Temperaturen"),
    N("Menge", "f", plural="Mengen"),
    N("Geschwindigkeit", "f", plural="Geschwindigkeiten"),
    N("Monat", "m", "Monats", "Monate"),
    N("Jahr", "n", "Jahres", "Jahre"),
]

ADJECTIVES = [
    # head pools
    A("kurz"), A("lang"), A("langweilig"), A("ausführlich"), A("literarisch"),
    A("komisch"), A("offiziell"), A("endgültig"), A("vollständig"), A("bekannt"),
    A("schwierig"), A("unangenehm"), A("angenehm"), A("übel", "üb" + "l"),
    A("intensiv"), A("groß"), A("neu"), A("schriftlich"),
    # filler pools
    A("deutsch"), A("alt"), A("spanisch"), A("russisch"), A("schlau"),
    A("mächtig"), A("nett"), A("privat"), A("jung"), A("frisch"),
    # adjectival arguments
    A("platonisch"), A("kantisch"), A("aristotelisch"), A("sokratisch"), A("marxistisch"),
    A("liturgisch"), A("juristisch"), A("wissenschaftlich"), A("religiös"),
    A("körperlich"), A("seelisch"), A("psychisch"),
    # non-valency adjectives of SCHMERZ
    A("stark"), A("chronisch"), A("stechend"), A("heftig"), A("akut"),
    A("leicht"), A("brennend"),
]

ONTOLOGY = [
    # (path, members, tags)
    (["belebt"], [], {}),
    (["belebt", "menschlich"], [], {"sumo": "Human"}),
    (["belebt", "menschlich", "beruf"],
     ["Architekt", "Autor", "Autorin", "Dichter", "Hersteller", "Journalistin", "Künstler",
      "Philosoph", "Sänger", "Schriftsteller", "Detektiv"], {}),
    (["belebt", "menschlich", "beruf", "ausbildung"],
     ["Akademiker", "Akademikerin", "Dozent", "Gastprofessor", "Erzieher",
      "Englischlehrer", "Englischlehrerin", "Lehrer"], {}),
    (["belebt", "menschlich", "eigenschaft"],
     ["Schüler", "Teilnehmer", "Tourist", "Flüchtling", "Bürger"], {}),
    (["belebt", "menschlich", "betroffener"], ["Patient", "Kind", "Mensch"], {}),
    (["belebt", "menschlich", "fachleute"], ["Experte", "Politiker"], {}),
    (["belebt", "menschlich", "organisation"], [], {}),
    (["belebt", "menschlich", "organisation", "unternehmen"], ["Verlag", "Konzern", "Firma"], {}),
    (["belebt", "menschlich", "organisation", "bildung"], ["Uni", "Hochschule", "Universität"], {}),
    (["belebt", "menschlich", "organisation", "politik"], ["EU", "Nato", "Partei"], {}),
    (["belebt", "menschlich", "organisation", "militär"], ["Polizei", "Armee", "Marine"], {}),
    (["belebt", "menschlich", "organisation", "regierung"],
     ["Bundesregierung", "Landesregierung", "Regierung", "Senat", "Verwaltung",
      "Stadtverwaltung", "Kommission"], {}),
    (["belebt", "menschlich", "verein"], [], {}),
    (["belebt", "menschlich", "verein", "freizeit"], ["Verein", "Klub", "Chor"], {}),
    (["belebt", "menschlich", "familie"], ["Cousine", "Mutter", "Vater", "Familie"], {}),
    (["belebt", "menschlich", "ideologie"], [], {}),
    (["belebt", "menschlich", "ideologie", "politik"], ["Faschist", "Sozialist", "Kommunist"], {}),
    (["belebt", "menschlich", "amt"], ["Geschäftsführerin", "Papst", "Präsident"], {}),
    (["belebt", "menschlich", "glaube"], ["Agnostiker", "Katholik", "Atheist"], {}),
    (["belebt", "menschlich", "eigenname"], ["Paulus", "Mia", "Lena"], {}),
    (["belebt", "menschlich", "kollektiv"], ["Band", "Jury", "Gruppe", "Bevölkerung"], {}),
    (["belebt", "menschlich", "körperteil"], [],
     {"sumo": "BodyPart+ BodyJunction+ Organ +", "eponyms": "external_body_part",
      "blc": "05220461-n body_part", "domain": "anatomy", "tco": "1stOrderEntity+ Living+ Part+"}),
    (["belebt", "menschlich", "körperteil", "extern"],
     ["Kopf", "Rücken", "Bauch", "Auge", "Haar", "Hand", "Fuß", "Zahn", "Hals", "Ohr", "Gesicht"], {}),
    (["belebt", "menschlich", "körperteil", "intern"], [], {}),
    (["belebt", "menschlich", "körperteil", "intern", "muskel/knochen"],
     ["Muskel", "Knochen", "Gelenk"], {}),
    (["belebt", "menschlich", "körperteil", "beschichtung"], ["Haut"], {}),
    (["belebt", "menschlich", "körperteil", "organ"], ["Eierstock", "Herz", "Magen", "Leber", "Niere"], {}),
    (["materiell"], [], {}),
    (["materiell", "werk"], [], {}),
    (["materiell", "werk", "schrift"],
     ["Bibel", "Buch", "Testament", "Schrift", "Evangelium", "Urkunde", "Petition", "Artikel"], {}),
    (["materiell", "werk", "musik"], ["Lied", "Song", "Oper"], {}),
    (["materiell", "gegenstand"], [], {}),
    (["materiell", "gegenstand", "schönheitspflege"], [], {}),
    (["materiell", "gegenstand", "schönheitspflege", "kosmetik"], ["Lippenstift"], {}),
    (["materiell", "gegenstand", "schönheitspflege", "nagelpflege"], ["Nagellack"], {}),
    (["materiell", "gegenstand", "kleidung"], ["Kleid"], {}),
    (["materiell", "gebäude"], ["Haus", "Wand"], {}),
    (["materiell", "gebäude", "raum"], ["Zimmer", "Küche", "Raum", "Keller"], {}),
    (["materiell", "getränk"], ["Wein", "Kaffee", "Bier", "Tee"], {}),
    (["materiell", "speise"], ["Brot", "Suppe", "Käse"], {}),
    (["materiell", "weg"], ["Straße", "Fluss", "Weg", "Brücke", "Tür"], {}),
    (["unbelebt"], [], {}),
    (["unbelebt", "natur"], ["Himmel", "Meer", "Blatt"], {}),
    (["unbelebt", "natur", "pflanze"], ["Blume", "Rose", "Lavendel"], {}),
    (["abstrakt"], [], {}),
    (["abstrakt", "kommunikation"], [], {}),
    (["abstrakt", "kommunikation", "textsorte"],
     ["Bemerkung", "Lösung", "Antwort", "Erklärung", "Ankündigung", "Beschreibung"], {}),
    (["abstrakt", "kommunikation", "anlass"], ["Predigt", "Abschied", "Presse"], {}),
    (["abstrakt", "kommunikation", "medium"], ["Mail", "E-Mail", "Webseite", "Seite", "Anzeige"], {}),
    (["abstrakt", "kommunikation", "äußerung"], ["Rede"], {}),
    (["abstrakt", "intellektuell"], [], {}),
    (["abstrakt", "intellektuell", "thema"],
     ["Thema", "Zukunft", "Sinn", "Frage", "Rolle", "Problem", "Einführung", "Umgang",
      "Inhalt", "Möglichkeit"], {}),
    (["abstrakt", "intellektuell", "kommunikation"],
     ["Anfrage", "Frage", "Bitte", "Beschwerde", "Kritik"], {}),
    (["abstrakt", "recht"], ["Gesetz", "Vertrag"], {}),
    (["abstrakt", "ereignis"], ["Hochzeit", "Versuchung"], {}),
    (["abstrakt", "größe"], ["Zahl", "Temperatur", "Menge", "Geschwindigkeit"], {}),
    (["abstrakt", "zeit"], ["Monat", "Jahr"], {}),
    (["eigenschaft"], [], {}),
    (["eigenschaft", "urheber"],
     ["platonisch", "kantisch", "aristotelisch", "sokratisch", "marxistisch"], {}),
    (["eigenschaft", "textsorte"],
     ["liturgisch", "literarisch", "juristisch", "wissenschaftlich", "religiös"], {}),
    (["eigenschaft", "empfindung"], ["körperlich", "seelisch", "psychisch"], {}),
]
